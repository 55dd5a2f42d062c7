"""Exception types shared across the workbench."""


class DegreeExceedsGridError(ValueError):
    """Requested spectral degree does not fit on the grid (2d+1 > N or Nyquist)."""


class RangeExceededError(ValueError):
    """Argument falls outside the tabulated range of an Orlicz function."""


class NoConvergenceError(RuntimeError):
    """Bracket expansion or iteration failed to converge."""


class InvalidGeneratorError(ValueError):
    """Orlicz generator produced a non-convex (or non-monotone) function."""


class NotInvariantError(ValueError):
    """Operator does not map the requested analytic subspace into itself."""


class UnsupportedExactError(ValueError):
    """Exact norm formula is unavailable for this operator/space combination."""


class OracleTooLargeError(ValueError):
    """Brute-force oracle only supports matrices of dimension <= 3."""


class InternalInconsistencyError(RuntimeError):
    """A certified lower bound exceeded a proven upper bound."""
