"""Summability kernels on the circle: Fejer, Poisson, and custom samples.

Both built-in kernels are nonnegative with unit mean and nonnegative
Fourier coefficients:

    Fejer    K_n(theta) = (1/(n+1)) * (sin((n+1)theta/2) / sin(theta/2))^2,
             coefficients (1 - |k|/(n+1))_+ supported on |k| <= n.
    Poisson  P_r(theta) = (1 - r^2) / (1 + r^2 - 2 r cos(theta)),
             coefficients r^{|k|}.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .grid import CircleGrid, SampledFunction, analyze

# |sin(theta/2)| below this counts as the removable singularity at theta = 0
_SINGULARITY_TOL = 1e-9

# numeric slack when verifying user-asserted nonnegativity flags
_FLAG_TOL = 1e-12


def fejer_kernel(n: int, grid: CircleGrid) -> SampledFunction:
    """Samples of the n-th Fejer kernel; K_n(0) = n+1 by the removable limit."""
    if n < 0:
        raise ValueError(f"Fejer order must be >= 0, got {n}")
    half = grid.theta / 2.0
    s = np.sin(half)
    singular = np.abs(s) < _SINGULARITY_TOL
    safe = np.where(singular, 1.0, s)
    values = (np.sin((n + 1) * half) / safe) ** 2 / (n + 1)
    values[singular] = float(n + 1)
    return SampledFunction(grid=grid, values=values)


def poisson_kernel(r: float, grid: CircleGrid) -> SampledFunction:
    """Samples of the Poisson kernel P_r, 0 <= r < 1."""
    if not 0.0 <= r < 1.0:
        raise ValueError(f"Poisson parameter must lie in [0, 1), got {r}")
    values = (1.0 - r * r) / (1.0 + r * r - 2.0 * r * np.cos(grid.theta))
    return SampledFunction(grid=grid, values=values)


def fejer_multipliers(n: int, degree: int) -> np.ndarray:
    """Multipliers m_k = (1 - |k|/(n+1))_+ for k = -degree..degree."""
    ks = np.arange(-degree, degree + 1)
    return np.maximum(0.0, 1.0 - np.abs(ks) / (n + 1))


def poisson_multipliers(r: float, degree: int) -> np.ndarray:
    """Multipliers r^{|k|} for k = -degree..degree.

    Truncation at |k| = degree drops spectral mass at most 2 r^{d+1}/(1-r).
    """
    ks = np.arange(-degree, degree + 1)
    return r ** np.abs(ks).astype(float)


@dataclass(frozen=True, eq=False)
class KernelSpec:
    """A convolution kernel together with its nonnegativity flags.

    `nonneg` asserts K >= 0 pointwise; `hat_nonneg` asserts all Fourier
    coefficients are >= 0.  Both hold for Fejer and Poisson kernels; custom
    kernels carry user-asserted flags that are verified numerically on
    construction.
    """

    kind: str  # "fejer" | "poisson" | "custom"
    nonneg: bool
    hat_nonneg: bool
    order: int | None = None  # Fejer n
    radius: float | None = None  # Poisson r
    samples: SampledFunction | None = field(default=None, repr=False)

    @classmethod
    def fejer(cls, n: int) -> "KernelSpec":
        if n < 0:
            raise ValueError(f"Fejer order must be >= 0, got {n}")
        return cls(kind="fejer", nonneg=True, hat_nonneg=True, order=n)

    @classmethod
    def poisson(cls, r: float) -> "KernelSpec":
        if not 0.0 <= r < 1.0:
            raise ValueError(f"Poisson parameter must lie in [0, 1), got {r}")
        return cls(kind="poisson", nonneg=True, hat_nonneg=True, radius=r)

    @classmethod
    def custom(
        cls, samples: SampledFunction, nonneg: bool, hat_nonneg: bool
    ) -> "KernelSpec":
        if nonneg and np.min(samples.values.real) < -_FLAG_TOL:
            raise ValueError("kernel asserted nonnegative but has negative samples")
        if hat_nonneg:
            c = analyze(samples, samples.grid.max_degree)
            if np.min(c.coeffs.real) < -_FLAG_TOL:
                raise ValueError(
                    "kernel asserted hat-nonnegative but has negative coefficients"
                )
        return cls(kind="custom", nonneg=nonneg, hat_nonneg=hat_nonneg, samples=samples)

    def sample(self, grid: CircleGrid) -> SampledFunction:
        if self.kind == "fejer":
            return fejer_kernel(self.order, grid)
        if self.kind == "poisson":
            return poisson_kernel(self.radius, grid)
        if self.samples.grid.n_points != grid.n_points:
            raise ValueError("custom kernel was sampled on a different grid")
        return self.samples

    def label(self) -> str:
        if self.kind == "fejer":
            return f"fejer:{self.order}"
        if self.kind == "poisson":
            return f"poisson:{self.radius:g}"
        return "custom"


def kernel_l1_norm(kernel: KernelSpec, grid: CircleGrid) -> float:
    """Discrete L^1 norm (1/N) * sum |K(theta_j)|."""
    values = kernel.sample(grid).values
    return float(np.mean(np.abs(values)))
