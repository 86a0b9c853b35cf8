"""Optimized bootstrapping: bit-average address states and their runtime gain.

Replacing the gradient address register of the stage-1 start state with the
normalised average-bit-weight vector raises the stage-1 overlap from
lambda1 to lambda1' = |<omega|s'>|^2 = ||Abar||_2^2 / (N ||A||_1).  The
average weights can be read off the bit matrix exactly, or estimated from
single-bit measurements behind the digit oracle.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .amplify import PreparedState, stage_overlaps, _resolve_alpha_l1, _default_delta1
from .errors import BoundInvalid, NoOverlap, OutOfRange, ZeroVector
from .amplitudes import QuantizedAmplitudes, bit_weights
from .statesim import StateVector, product_state


@dataclass(frozen=True)
class BitWeightProfile:
    """Average bit weights Abar_j = 2^-(j+1)/2 sum_i A_ij, plus the raw
    per-bit one-frequencies they were derived from."""

    weights: np.ndarray
    raw_frequencies: np.ndarray
    source: str
    shots: int | None = None

    def __post_init__(self):
        weights = np.asarray(self.weights, dtype=float)
        raw = np.asarray(self.raw_frequencies, dtype=float)
        if weights.ndim != 1 or weights.shape != raw.shape:
            raise ValueError("weights and raw_frequencies must be matching 1-d arrays")
        if np.any(weights < 0) or np.any(raw < 0) or np.any(raw > 1 + 1e-12):
            raise OutOfRange("raw frequencies must lie in [0, 1] and weights be nonnegative")
        if self.source not in ("exact", "sampled"):
            raise ValueError(f"source must be 'exact' or 'sampled', got {self.source!r}")
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "raw_frequencies", raw)

    @property
    def g(self) -> int:
        return self.weights.shape[0]

    def norm(self) -> float:
        return float(np.linalg.norm(self.weights))


def _weights_from_raw(raw: np.ndarray, n_elements: int) -> np.ndarray:
    return np.sqrt(bit_weights(raw.shape[0])) * raw * n_elements


def average_bit_weights(quantized: QuantizedAmplitudes) -> BitWeightProfile:
    """Exact column averages of the bit matrix."""
    counts = quantized.bits.sum(axis=0).astype(float)
    raw = counts / quantized.n_elements
    return BitWeightProfile(
        weights=_weights_from_raw(raw, quantized.n_elements),
        raw_frequencies=raw,
        source="exact",
    )


def estimate_bit_weights(
    oracle,
    shots: int,
    seed: int = 0,
    replace: bool = True,
) -> BitWeightProfile:
    """Estimate the bit averages from `shots` digit-oracle queries at
    uniformly random indices (``replace=False`` samples indices without
    repetition, so ``shots = N`` reproduces the exact counts).

    Each sampled index costs one oracle query; on a basis-state input the
    digit oracle just reveals that row of the bit table, so the readout is
    taken from the table directly.  Sampled raw frequencies are floored at
    2^-g so genuinely present bits never get zero address amplitude.
    """
    if oracle.kind != "digit":
        raise ValueError(f"need a digit oracle, got {oracle.kind!r}")
    if shots <= 0:
        raise OutOfRange(f"shots must be positive, got {shots}")
    n, g = oracle.bits.n_elements, oracle.bits.g
    rng = np.random.default_rng(seed)
    if replace:
        indices = rng.integers(0, n, size=shots)
    else:
        if shots > n:
            raise OutOfRange(f"cannot draw {shots} distinct indices from {n}")
        indices = rng.permutation(n)[:shots]
    words = oracle.bits.int_values[indices]
    oracle.query_count += shots
    shifts = g - 1 - np.arange(g)
    ones = ((words[:, None] >> shifts) & 1).sum(axis=0)
    raw = np.maximum(ones / shots, 2.0**-g)
    return BitWeightProfile(
        weights=_weights_from_raw(raw, n),
        raw_frequencies=raw,
        source="sampled",
        shots=shots,
    )


def optimized_initial_state(
    profile: BitWeightProfile, n_elements: int
) -> tuple[StateVector, PreparedState]:
    """Uniform index register tensored with the normalised weight vector."""
    norm = profile.norm()
    if norm <= 0.0:
        raise ZeroVector("all average bit weights are zero")
    index = np.full(n_elements, 1.0 / math.sqrt(n_elements))
    address = profile.weights / norm
    state = product_state(
        [StateVector(index, (n_elements,)), StateVector(address, (profile.g,))]
    )
    return state, PreparedState(state)


def lambda1_prime(quantized: QuantizedAmplitudes, profile: BitWeightProfile) -> float:
    """Stage-1 overlap of the bootstrapped start, |<omega|s'>|^2.

    For the exact profile this is ||Abar||_2^2 / (N ||A||_1); a mismatched
    profile triggers a warning and the overlap is evaluated against its
    actual address direction.
    """
    exact = average_bit_weights(quantized)
    if profile.g != exact.g:
        raise ValueError("profile precision does not match the bit matrix")
    norm = profile.norm()
    if norm <= 0.0:
        raise ZeroVector("all average bit weights are zero")
    if profile.source == "exact":
        scale = norm / max(exact.norm(), 1e-300)
        if not np.allclose(profile.weights, exact.weights * scale, atol=1e-9 * max(1.0, norm)):
            warnings.warn("exact-source profile does not match the bit matrix", stacklevel=2)
    l1 = quantized.norms().l1
    if l1 <= 0.0:
        raise ZeroVector("all quantized amplitudes are zero")
    inner = float(np.dot(exact.weights, profile.weights)) / norm
    return inner**2 / (quantized.n_elements * l1)


def bootstrap_slowdown_ratio(exact: BitWeightProfile, approx: BitWeightProfile) -> float:
    """Round-count penalty ||Abar|| ||Bbar|| / <Abar, Bbar> for running with
    the approximate profile; 1 for identical directions, >= 1 always."""
    if exact.g != approx.g:
        raise ValueError("profiles have different precisions")
    na, nb = exact.norm(), approx.norm()
    if na <= 0.0 or nb <= 0.0:
        raise ZeroVector("slowdown ratio needs two nonzero profiles")
    inner = float(np.dot(exact.weights, approx.weights))
    if inner <= 0.0:
        raise NoOverlap("profiles are orthogonal; the slowdown is unbounded")
    return na * nb / inner


class PrimeRuntimeBound(NamedTuple):
    bound: float
    lp_core: int


def runtime_bound_prime(
    quantized: QuantizedAmplitudes,
    alpha: np.ndarray | None = None,
    delta1: float | None = None,
    delta2: float = 0.5,
    profile: BitWeightProfile | None = None,
) -> PrimeRuntimeBound:
    """Bootstrapped round-count bound
    log2(2/d1) log2(2/d2) (1 + 2^(1-g) l1) sqrt(N) l1 / ||Abar||_2,
    together with the core factor ceil(1/sqrt(lambda1' lambda2))."""
    n, g = quantized.n_elements, quantized.g
    if profile is None:
        profile = average_bit_weights(quantized)
    abar_norm = profile.norm()
    if abar_norm <= 0.0:
        raise ZeroVector("all average bit weights are zero")
    alpha_l1 = _resolve_alpha_l1(quantized, alpha)
    if delta1 is None:
        delta1 = _default_delta1(g, alpha_l1)
    x = 2.0**-g * n / alpha_l1
    if x >= 0.5:
        warnings.warn(
            f"precondition x = 2^-g N / l1 = {x:.3g} >= 1/2; bound is not guaranteed",
            BoundInvalid,
        )
    bound = (
        math.log2(2.0 / delta1)
        * math.log2(2.0 / delta2)
        * (1.0 + 2.0 ** (1 - g) * alpha_l1)
        * math.sqrt(n)
        * alpha_l1
        / abar_norm
    )
    _, lambda2 = stage_overlaps(quantized)
    lam1p = lambda1_prime(quantized, profile)
    return PrimeRuntimeBound(bound=bound, lp_core=math.ceil(1.0 / math.sqrt(lam1p * lambda2)))
