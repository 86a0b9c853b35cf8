"""Target amplitude vectors and their g-bit binary quantization.

A target is a list of nonnegative amplitudes alpha_i.  Quantization
rounds each value toward zero onto g binary digits A_i = sum_j
2^-(j+1) A_ij, with bit 0 the most significant (weight 1/2).  An
optional dynamic-range shift rescales by a power of two so the largest
amplitude occupies bit 0, which costs nothing downstream because the
loaded state is normalized anyway.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import OutOfRange, ZeroVector


@dataclass(frozen=True)
class NormSummary:
    l1: float
    l2: float


@dataclass(frozen=True)
class AmplitudeVector:
    """Nonnegative real target amplitudes."""

    values: np.ndarray

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=float).ravel()
        if vals.size == 0:
            raise ValueError("need at least one amplitude")
        if not np.all(np.isfinite(vals)):
            raise ValueError("amplitudes must be finite")
        if np.any(vals < 0):
            raise ValueError("amplitudes must be nonnegative")
        object.__setattr__(self, "values", vals)

    @property
    def n_elements(self) -> int:
        return int(self.values.size)

    def norms(self) -> NormSummary:
        return NormSummary(
            l1=float(np.sum(self.values)),
            l2=float(np.linalg.norm(self.values)),
        )


def bit_weights(g: int) -> np.ndarray:
    """Place values (1/2, 1/4, ..., 2^-g) for bits 0..g-1."""
    return 0.5 ** (1 + np.arange(g))


@dataclass(frozen=True)
class QuantizedAmplitudes:
    """N x g bit matrix A_ij plus the scale shift used to produce it."""

    bits: np.ndarray
    g: int
    scale_shift: int = 0

    def __post_init__(self):
        bits = np.asarray(self.bits)
        if bits.ndim != 2 or bits.shape[1] != self.g:
            raise ValueError(f"bit matrix must be N x {self.g}")
        if not np.isin(bits, (0, 1)).all():
            raise ValueError("bit matrix entries must be 0/1")
        if self.g < 1:
            raise ValueError("g must be >= 1")
        if self.scale_shift < 0:
            raise ValueError("scale shift must be >= 0")
        object.__setattr__(self, "bits", bits.astype(np.uint8))

    @property
    def n_elements(self) -> int:
        return int(self.bits.shape[0])

    @property
    def values(self) -> np.ndarray:
        """Quantized amplitudes A_i (in the shifted frame when shift > 0)."""
        return self.bits @ bit_weights(self.g)

    @property
    def int_values(self) -> np.ndarray:
        """A_i * 2^g as integers; the data-register words of the digit oracle."""
        powers = 1 << (self.g - 1 - np.arange(self.g))
        return (self.bits.astype(np.int64) @ powers).astype(np.int64)

    def norms(self) -> NormSummary:
        vals = self.values
        return NormSummary(float(vals.sum()), float(np.linalg.norm(vals)))

    def to_json_dict(self) -> dict:
        return {
            "n": self.n_elements,
            "g": self.g,
            "shift": self.scale_shift,
            "values": [float(v) for v in self.values],
            "bits": self.bits.astype(int).tolist(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_json_dict(cls, data: dict) -> "QuantizedAmplitudes":
        q = cls(
            bits=np.array(data["bits"], dtype=np.uint8),
            g=int(data["g"]),
            scale_shift=int(data["shift"]),
        )
        if q.n_elements != int(data["n"]):
            raise ValueError("bit matrix row count disagrees with n")
        return q


def normalize(v) -> AmplitudeVector:
    """Scale to unit l2 norm; accepts an AmplitudeVector or a plain array."""
    vals = v.values if isinstance(v, AmplitudeVector) else AmplitudeVector(v).values
    n = float(np.linalg.norm(vals))
    if n == 0.0:
        raise ZeroVector("cannot normalize the zero vector")
    return AmplitudeVector(vals / n)


def shift_exponent(max_value: float) -> int:
    """Smallest t >= 0 with 2^t * max_value in [1/2, 1).

    frexp keeps this exact on powers of two, where a log would round.
    """
    if max_value <= 0:
        raise ZeroVector("shift undefined for an all-zero vector")
    _, exp = math.frexp(max_value)
    return max(0, -exp)


def quantize(v: AmplitudeVector, g: int, shift: bool = False) -> QuantizedAmplitudes:
    """Round-toward-zero binary approximation at g bits.

    Requires values in [0, 1].  With shift=True the values are first
    scaled by 2^t so the largest lands in [1/2, 1); amplitudes exactly
    1.0 map to the largest representable value 1 - 2^-g.
    """
    if g < 1:
        raise OutOfRange("g must be >= 1")
    vals = v.values if isinstance(v, AmplitudeVector) else AmplitudeVector(v).values
    if np.any(vals > 1.0):
        raise OutOfRange("quantize expects amplitudes in [0, 1]")
    t = 0
    if shift:
        t = shift_exponent(float(vals.max()))
        vals = vals * (2.0 ** t)
    ints = np.minimum(np.floor(vals * 2.0 ** g), 2.0 ** g - 1).astype(np.int64)
    j = np.arange(g)
    bits = ((ints[:, None] >> (g - 1 - j)) & 1).astype(np.uint8)
    return QuantizedAmplitudes(bits=bits, g=g, scale_shift=t)


class TraceDistanceBound(NamedTuple):
    actual: float
    bound: float


def trace_distance_bound(
    v: AmplitudeVector, q: QuantizedAmplitudes
) -> TraceDistanceBound:
    """Quantization error of the loaded state, and its a priori bound.

    actual = sqrt(1 - |<alpha_hat|A_hat>|^2) between the normalized
    target and the normalized quantized vector; bound = 2^((1-g)/2) *
    sqrt(l1 of the normalized target).  Meaningful for unshifted q.
    """
    alpha = normalize(v).values
    a_vals = q.values
    a_norm = float(np.linalg.norm(a_vals))
    if a_norm == 0.0:
        raise ZeroVector("quantized vector is zero; no state to compare")
    inner = float(alpha @ (a_vals / a_norm))
    actual = math.sqrt(max(0.0, 1.0 - inner * inner))
    bound = 2.0 ** ((1 - q.g) / 2) * math.sqrt(float(alpha.sum()))
    return TraceDistanceBound(actual=actual, bound=bound)
