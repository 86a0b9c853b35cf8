"""Benchmark amplitude families and their runtime-scaling sweep.

Seven families cover the qualitative range of loading difficulty, from a
single marked element (1-norm 1, hardest) to a flat profile (1-norm
sqrt(N), easiest).  ``scaling_check`` sweeps N, computes the core round
factors with the dynamic-range shift enabled, and fits the growth exponent
of the bootstrapped rounds on a log-log scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .amplify import stage_overlaps
from .amplitudes import AmplitudeVector, quantize
from .bootstrap import average_bit_weights, lambda1_prime
from .errors import OutOfRange

FAMILIES = ("delta", "uniform", "triangle", "powerlaw", "normal", "random", "sine")


@dataclass(frozen=True)
class DistributionSpec:
    """One amplitude family instance; ``k`` parametrizes powerlaw decay,
    ``sigma`` the normal width in index units, ``seed`` the random draw."""

    family: str
    n_elements: int
    k: float | None = None
    sigma: float | None = None
    seed: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise OutOfRange(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.n_elements < 2:
            raise OutOfRange(f"need at least 2 elements, got {self.n_elements}")
        if self.family == "powerlaw":
            if self.k is None or self.k <= 0:
                raise OutOfRange("powerlaw needs a decay exponent k > 0")
        if self.family == "normal":
            if self.sigma is None or self.sigma <= 0:
                raise OutOfRange("normal needs a standard deviation sigma > 0")

    @property
    def param(self) -> float:
        if self.family == "powerlaw":
            return self.k
        if self.family == "normal":
            return self.sigma
        if self.family == "random":
            return self.seed
        return 0.0


def harmonic_number(n: int, k: float) -> float:
    """Generalized harmonic number sum_{r=1}^{n} r^-k by direct summation."""
    if n < 1:
        raise OutOfRange(f"need n >= 1, got {n}")
    return float(np.sum(np.arange(1, n + 1, dtype=float) ** -k))


def generate(spec: DistributionSpec) -> AmplitudeVector:
    """Unit-norm amplitude vector for the requested family."""
    n = spec.n_elements
    if spec.family == "delta":
        values = np.zeros(n)
        values[0] = 1.0
    elif spec.family == "uniform":
        values = np.full(n, 1.0 / math.sqrt(n))
    elif spec.family == "triangle":
        i = np.arange(n, dtype=float)
        values = i / math.sqrt(n * (n - 1) * (2 * n - 1) / 6.0)
    elif spec.family == "powerlaw":
        r = np.arange(1, n + 1, dtype=float)
        values = r**-spec.k / math.sqrt(harmonic_number(n, 2.0 * spec.k))
    elif spec.family == "normal":
        x = np.arange(n, dtype=float) - (n - 1) / 2.0
        values = np.exp(-(x**2) / (2.0 * spec.sigma**2))
    elif spec.family == "random":
        values = np.random.default_rng(spec.seed).uniform(0.0, 1.0, size=n)
    else:  # sine
        i = np.arange(n, dtype=float)
        values = math.sqrt(2.0 / (n + 1)) * np.sin(math.pi * (i + 1) / (n + 1))
    return AmplitudeVector(values / np.linalg.norm(values))


@dataclass(frozen=True)
class ScalingReport:
    """Sweep output: core round factors per N and the fitted exponent of
    the bootstrapped rounds (slope of log2 Lp_core vs log2 N)."""

    family: str
    param: float
    g: int
    n_values: tuple[int, ...]
    l_cores: tuple[int, ...]
    lp_cores: tuple[int, ...]
    abar_norms: tuple[float, ...]
    slope: float
    intercept: float
    abar_slope: float


def core_rounds(spec: DistributionSpec, g: int, shift: bool = True) -> tuple[int, int, float]:
    """(L_core, Lp_core, ||Abar||_2) for one sweep point."""
    vec = generate(spec)
    q = quantize(vec.values, g, shift=shift)
    lambda1, lambda2 = stage_overlaps(q)
    profile = average_bit_weights(q)
    lam1p = lambda1_prime(q, profile)
    l_core = math.ceil(1.0 / math.sqrt(lambda1 * lambda2))
    lp_core = math.ceil(1.0 / math.sqrt(lam1p * lambda2))
    return l_core, lp_core, profile.norm()


def scaling_check(spec: DistributionSpec, g: int, n_range) -> ScalingReport:
    """Fit the growth of the bootstrapped core rounds across ``n_range``
    (which must span at least three octaves), shift enabled throughout."""
    n_values = sorted(int(n) for n in n_range)
    if len(n_values) < 3 or n_values[-1] < 8 * n_values[0]:
        raise OutOfRange("n_range must span at least three octaves")
    l_cores, lp_cores, abar_norms = [], [], []
    for n in n_values:
        point = replace(spec, n_elements=n)
        l_core, lp_core, abar = core_rounds(point, g, shift=True)
        l_cores.append(l_core)
        lp_cores.append(lp_core)
        abar_norms.append(abar)
    log_n = np.log2(np.asarray(n_values, dtype=float))
    slope, intercept = np.polyfit(log_n, np.log2(lp_cores), 1)
    abar_slope = np.polyfit(log_n, np.log2(abar_norms), 1)[0]
    return ScalingReport(
        family=spec.family,
        param=spec.param,
        g=g,
        n_values=tuple(n_values),
        l_cores=tuple(l_cores),
        lp_cores=tuple(lp_cores),
        abar_norms=tuple(abar_norms),
        slope=float(slope),
        intercept=float(intercept),
        abar_slope=float(abar_slope),
    )
