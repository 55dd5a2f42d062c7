"""Norm evaluators: L^p, weighted L^p, Lorentz L^{p,q}, Orlicz L^phi.

All evaluators act on SampledFunction values with the normalized counting
measure (weight 1/N per grid point), so norms of constants equal their
modulus in every space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import InvalidGeneratorError, NoConvergenceError, RangeExceededError
from .grid import CircleGrid, FourierCoeffs, SampledFunction, synthesize

INF = math.inf

_PHI_TABLE_NODES = 4096  # 2^12 log-spaced nodes per table
_PHI_RANGE = (1e-12, 1e12)  # initial argument range of phi^{-1}

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


# ---------------------------------------------------------------------------
# L^p and weighted L^p
# ---------------------------------------------------------------------------


def _weighted_lp(values: np.ndarray, p: float, quad_weight: float) -> float:
    a = np.abs(values)
    if p == INF:
        return float(np.max(a))
    return float((quad_weight * np.sum(a**p)) ** (1.0 / p))


def lp_norm(f: SampledFunction, p: float, weight: SampledFunction | None = None) -> float:
    """((1/N) sum |f_j w_j|^p)^{1/p}; max |f_j w_j| for p = inf.

    The weighted norm is, by definition, the unweighted norm of f*w.
    """
    if p != INF and p < 1.0:
        raise ValueError(f"p must lie in [1, inf], got {p}")
    values = f.values
    if weight is not None:
        w = weight.values.real
        if np.min(w) <= 0.0:
            raise ValueError("weight must be strictly positive")
        values = values * w
    return _weighted_lp(values, p, f.grid.quad_weight)


def hp_norm(c: FourierCoeffs, p: float, grid: CircleGrid,
            weight: SampledFunction | None = None) -> float:
    """Induced norm of an analytic polynomial: synthesize, then take L^p."""
    return lp_norm(synthesize(c, grid), p, weight=weight)


def holder_conjugate(p: float) -> float:
    """p' with 1/p + 1/p' = 1 (shared helper, so the formula lives once)."""
    if p == 1.0:
        return INF
    if p == INF:
        return 1.0
    return p / (p - 1.0)


# ---------------------------------------------------------------------------
# Decreasing rearrangement and Lorentz norms
# ---------------------------------------------------------------------------


def decreasing_rearrangement(f: SampledFunction) -> np.ndarray:
    """|f| sorted descending: the step heights of f* on [(i-1)/N, i/N).

    Stable sort on |value| with ties broken by original index, so the
    rearrangement is deterministic.
    """
    a = np.abs(f.values)
    order = np.argsort(-a, kind="stable")
    return a[order]


def lorentz_norm(f: SampledFunction, p: float, q: float) -> float:
    """Lorentz norm ( int_0^1 [t^{1/p} f*(t)]^q dt/t )^{1/q}, 1 <= q <= p < inf.

    The integral is evaluated exactly on the step function f*:
        sum_i (p/q) * (t_i^{q/p} - t_{i-1}^{q/p}) * (f*_i)^q,  t_i = i/N.
    """
    if not (1.0 <= q <= p) or p == INF:
        raise ValueError(f"Lorentz parameters need 1 <= q <= p < inf, got p={p}, q={q}")
    star = decreasing_rearrangement(f)
    n = star.size
    t = np.arange(n + 1) / n
    pieces = (p / q) * np.diff(t ** (q / p))
    return float(np.sum(pieces * star**q) ** (1.0 / q))


# ---------------------------------------------------------------------------
# Orlicz functions phi built from a quasi-concave generator rho
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class PhiSpec:
    """A convex Orlicz function phi, tabulated together with its inverse.

    phi^{-1}(x) = x^{1/p} * rho(x^{1/q - 1/p}) is tabulated at log-spaced
    arguments x; phi itself is the same monotone table read backwards.
    Interpolation is linear in log-log coordinates, which keeps the table
    monotone and is exact on the power family rho(t) = t^theta.

    Tables are immutable; `extended_to` returns a new PhiSpec on a wider
    range (possible only while the generator is attached).
    """

    p: float
    q: float
    x_table: np.ndarray = field(repr=False)  # arguments of phi^{-1}
    y_table: np.ndarray = field(repr=False)  # phi^{-1}(x); phi maps y -> x
    rho: Callable[[np.ndarray], np.ndarray] | None = field(default=None, repr=False)
    theta: float | None = None

    def __post_init__(self):
        if not np.all(np.diff(self.y_table) > 0.0):
            raise InvalidGeneratorError("phi^{-1} table is not strictly increasing")
        _check_convexity(self.x_table, self.y_table)

    # -- evaluation ---------------------------------------------------------

    def phi(self, y: np.ndarray) -> np.ndarray:
        """phi(y) for y >= 0; exact zeros map to 0 (phi(0) = 0)."""
        y = np.asarray(y, dtype=float)
        out = np.zeros_like(y)
        pos = y > 0.0
        if np.any(pos):
            yp = y[pos]
            if np.min(yp) < self.y_table[0] or np.max(yp) > self.y_table[-1]:
                raise RangeExceededError(
                    "argument outside tabulated range of phi; extend the table"
                )
            out[pos] = np.exp(
                np.interp(np.log(yp), np.log(self.y_table), np.log(self.x_table))
            )
        return out

    def phi_inv(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        out = np.zeros_like(x)
        pos = x > 0.0
        if np.any(pos):
            xp = x[pos]
            if np.min(xp) < self.x_table[0] or np.max(xp) > self.x_table[-1]:
                raise RangeExceededError(
                    "argument outside tabulated range of phi^{-1}; extend the table"
                )
            out[pos] = np.exp(
                np.interp(np.log(xp), np.log(self.x_table), np.log(self.y_table))
            )
        return out

    # -- table management ---------------------------------------------------

    def extended_to(self, values: np.ndarray) -> "PhiSpec":
        """New PhiSpec whose phi-range covers all positive entries of `values`."""
        if self.rho is None:
            raise RangeExceededError(
                "phi table has no generator attached; cannot auto-extend"
            )
        pos = np.abs(values[np.abs(values) > 0.0])
        lo = min(float(np.min(pos)), self.y_table[0])
        hi = max(float(np.max(pos)), self.y_table[-1])
        # convert the needed phi-domain [lo, hi] to a phi^{-1}-domain bracket,
        # with headroom so repeated extensions are rare
        x_lo, x_hi = self.x_table[0], self.x_table[-1]
        for _ in range(40):
            if _phi_inv_formula(x_lo, self.p, self.q, self.rho) <= lo * 0.5:
                break
            x_lo *= 1e-6
        else:
            raise NoConvergenceError("phi table extension failed at the lower end")
        for _ in range(40):
            if _phi_inv_formula(x_hi, self.p, self.q, self.rho) >= hi * 2.0:
                break
            x_hi *= 1e6
        else:
            raise NoConvergenceError("phi table extension failed at the upper end")
        return _build_phi(self.p, self.q, self.rho, self.theta, x_lo, x_hi)


def _phi_inv_formula(x, p, q, rho):
    return x ** (1.0 / p) * rho(x ** (1.0 / q - 1.0 / p))


def _check_convexity(x_table: np.ndarray, y_table: np.ndarray) -> None:
    # chord slopes of phi (x as a function of y) must be nondecreasing;
    # tolerance is relative because slopes span many orders of magnitude
    slopes = np.diff(x_table) / np.diff(y_table)
    drop = np.diff(slopes)
    scale = np.maximum(slopes[:-1], slopes[1:])
    if np.any(drop < -1e-8 * np.maximum(scale, 1e-300)):
        raise InvalidGeneratorError(
            "tabulated phi is not convex; generator rho is not admissible"
        )


def _build_phi(p, q, rho, theta, x_lo, x_hi) -> PhiSpec:
    x = np.exp(np.linspace(math.log(x_lo), math.log(x_hi), _PHI_TABLE_NODES))
    y = _phi_inv_formula(x, p, q, rho)
    return PhiSpec(p=p, q=q, x_table=x, y_table=y, rho=rho, theta=theta)


def phi_from_rho(p: float, q: float, theta: float | None = 0.0,
                 rho: Callable[[np.ndarray], np.ndarray] | None = None) -> PhiSpec:
    """Build phi from phi^{-1}(x) = x^{1/p} rho(x^{1/q-1/p}), 1 < p < q < inf.

    The default generator family is rho(t) = t^theta with theta in [0, 1]
    (concave and quasi-concave); theta = 0 gives phi(x) = x^p unchanged,
    theta = 1 gives phi(x) = x^q.  A custom monotone `rho` callable may be
    supplied instead.
    """
    if not 1.0 < p < q < INF:
        raise ValueError(f"need 1 < p < q < inf, got p={p}, q={q}")
    if rho is None:
        if theta is None or not 0.0 <= theta <= 1.0:
            raise ValueError(f"theta must lie in [0, 1], got {theta}")
        expo = float(theta)
        rho = lambda t: np.asarray(t, dtype=float) ** expo  # noqa: E731
    else:
        theta = None
    return _build_phi(p, q, rho, theta, *_PHI_RANGE)


# ---------------------------------------------------------------------------
# Orlicz modular and the two equivalent norms
# ---------------------------------------------------------------------------


def orlicz_modular(f: SampledFunction, phi: PhiSpec) -> float:
    """I_phi(f) = (1/N) sum phi(|f_j|).

    Raises RangeExceededError when some |f_j| falls outside the tabulated
    range (extend the table, e.g. via phi.extended_to).
    """
    return float(np.mean(phi.phi(np.abs(f.values))))


def _modular_auto(values_abs: np.ndarray, phi: PhiSpec, scale: float) -> tuple[float, PhiSpec]:
    """Modular of scale*|f| with transparent table extension."""
    scaled = values_abs * scale
    for _ in range(8):
        try:
            return float(np.mean(phi.phi(scaled))), phi
        except RangeExceededError:
            phi = phi.extended_to(scaled)
    raise NoConvergenceError("phi table extension did not stabilize")


def luxemburg_norm(f: SampledFunction, phi: PhiSpec) -> float:
    """inf{ lambda > 0 : I_phi(f/lambda) <= 1 } by monotone bisection.

    lambda -> I_phi(f/lambda) is nonincreasing; the bracket is expanded by
    doubling/halving before bisecting to relative width 1e-10.
    """
    a = np.abs(f.values)
    if not np.any(a > 0.0):
        return 0.0
    lam = float(np.max(a))
    modular, phi = _modular_auto(a, phi, 1.0 / lam)
    lo = hi = lam
    for _ in range(200):
        if modular <= 1.0:
            break
        lo = hi
        hi *= 2.0
        modular, phi = _modular_auto(a, phi, 1.0 / hi)
    else:
        raise NoConvergenceError("Luxemburg bracket expansion failed (upper)")
    for _ in range(200):
        m_lo, phi = _modular_auto(a, phi, 1.0 / lo)
        if m_lo > 1.0:
            break
        hi = lo
        lo /= 2.0
    else:
        # modular stays <= 1 for arbitrarily small lambda only if f = 0,
        # which was excluded above; treat as converged-to-zero bracket
        return 0.0
    while hi - lo > 1e-10 * hi:
        mid = 0.5 * (lo + hi)
        m_mid, phi = _modular_auto(a, phi, 1.0 / mid)
        if m_mid <= 1.0:
            hi = mid
        else:
            lo = mid
    # hi is feasible (modular <= 1), hence an upper enclosure of the infimum
    return hi


def orlicz_amemiya_norm(f: SampledFunction, phi: PhiSpec) -> float:
    """inf_{k>0} (1 + I_phi(k f))/k by golden-section search over log k.

    The objective is unimodal in k (it is convex as a function of 1/k).
    """
    a = np.abs(f.values)
    if not np.any(a > 0.0):
        return 0.0

    state = {"phi": phi}

    def objective(log_k: float) -> float:
        k = math.exp(log_k)
        modular, state["phi"] = _modular_auto(a, state["phi"], k)
        return (1.0 + modular) / k

    # expand a unimodal bracket around k = 1/max|f|
    center = -math.log(float(np.max(a)))
    step = 1.0
    lo, mid, hi = center - step, center, center + step
    f_lo, f_mid, f_hi = objective(lo), objective(mid), objective(hi)
    for _ in range(200):
        if f_mid <= f_lo and f_mid <= f_hi:
            break
        if f_lo < f_hi:
            hi, f_hi = mid, f_mid
            mid, f_mid = lo, f_lo
            lo -= step
            f_lo = objective(lo)
        else:
            lo, f_lo = mid, f_mid
            mid, f_mid = hi, f_hi
            hi += step
            f_hi = objective(hi)
        step *= 1.5
    else:
        raise NoConvergenceError("Amemiya bracket expansion failed")

    x1 = hi - _GOLDEN * (hi - lo)
    x2 = lo + _GOLDEN * (hi - lo)
    f1, f2 = objective(x1), objective(x2)
    while hi - lo > 1e-9:
        if f1 < f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _GOLDEN * (hi - lo)
            f1 = objective(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _GOLDEN * (hi - lo)
            f2 = objective(x2)
    return min(f1, f2)


# ---------------------------------------------------------------------------
# Space specifications (dispatch layer)
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Lp:
    p: float

    def norm(self, f: SampledFunction) -> float:
        return lp_norm(f, self.p)

    def label(self) -> str:
        return f"L^{self.p:g}"


@dataclass(frozen=True, eq=False)
class WeightedLp:
    p: float
    weight: SampledFunction

    def __post_init__(self):
        if np.min(self.weight.values.real) <= 0.0:
            raise ValueError("weight must be strictly positive at every grid point")

    def norm(self, f: SampledFunction) -> float:
        return lp_norm(f, self.p, weight=self.weight)

    def label(self) -> str:
        return f"L^{self.p:g}(w)"


@dataclass(frozen=True, eq=False)
class Lorentz:
    p: float
    q: float

    def __post_init__(self):
        if not (1.0 <= self.q <= self.p) or self.p == INF:
            raise ValueError(
                f"Lorentz parameters need 1 <= q <= p < inf, got p={self.p}, q={self.q}"
            )

    def norm(self, f: SampledFunction) -> float:
        return lorentz_norm(f, self.p, self.q)

    def label(self) -> str:
        return f"L^{{{self.p:g},{self.q:g}}}"


@dataclass(frozen=True, eq=False)
class Orlicz:
    phi: PhiSpec
    flavor: str = "luxemburg"  # or "amemiya"

    def norm(self, f: SampledFunction) -> float:
        if self.flavor == "luxemburg":
            return luxemburg_norm(f, self.phi)
        if self.flavor == "amemiya":
            return orlicz_amemiya_norm(f, self.phi)
        raise ValueError(f"unknown Orlicz norm flavor {self.flavor!r}")

    def label(self) -> str:
        return f"L^phi[{self.flavor}]"
