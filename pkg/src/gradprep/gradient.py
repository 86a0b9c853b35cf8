"""Amplitude-gradient states and their gate-level preparation circuit.

The gradient state on g bit positions puts amplitude proportional to
2^(-j/2) on position j, mirroring binary place values.  The circuit
construction trades one extra dimension of slack for exactness: a chain
of g square-root-of-CNOT splitting stages prepares the slack-augmented
state in unary, a CNOT fan-out writes the binary label, and half a
permutation network funnels the one-hot bit away, leaving the address
register alone in the slack-augmented gradient state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import OutOfRange
from .statesim import WIRE_CAP, Circuit, StateVector


@dataclass(frozen=True)
class GradientSpec:
    """g bit positions; optional per-position weights w_j replacing 2^-j."""

    g: int
    weights: tuple | None = None

    def __post_init__(self):
        if self.g < 1:
            raise ValueError("g must be >= 1")
        if self.weights is not None:
            w = tuple(float(x) for x in self.weights)
            if len(w) != self.g:
                raise ValueError("need one weight per bit position")
            if any(x <= 0 for x in w):
                raise ValueError("weights must be strictly positive")
            object.__setattr__(self, "weights", w)


def gradient_state(spec: GradientSpec | int) -> StateVector:
    """(1/sqrt(2^g - 1)) sum_j 2^((g-j-1)/2) |j>, or the weighted variant."""
    if isinstance(spec, int):
        spec = GradientSpec(g=spec)
    g = spec.g
    if spec.weights is None:
        amps = np.sqrt(2.0 ** (g - 1 - np.arange(g)) / (2.0 ** g - 1.0))
    else:
        w = np.asarray(spec.weights, dtype=float)
        amps = np.sqrt(w / w.sum())
    return StateVector(amps.astype(complex), (g,))


def slack_gradient_state(g: int) -> StateVector:
    """Gradient state over g positions plus one slack dimension.

    Amplitudes proportional to (2^((g-1)/2), ..., sqrt2, 1, 1); the two
    trailing entries are equal, each carrying 2^-g of the weight, and
    the squared norm closes exactly at 2^g.
    """
    if g < 1:
        raise OutOfRange("g must be >= 1")
    ladder = [2.0 ** ((g - 1 - m) / 2) for m in range(g - 1)]
    amps = np.array(ladder + [1.0, 1.0]) / 2.0 ** (g / 2)
    return StateVector(amps.astype(complex), (g + 1,))


def circuit_wire_names(g: int) -> tuple[list[str], list[str]]:
    """Unary wires (padded to a power of two) and address wires for g."""
    q = max(1, math.ceil(math.log2(g + 1)))
    unary = [f"u{m}" for m in range(2 ** q)]
    address = [f"a{b}" for b in range(q)]
    return unary, address


def build_gradient_circuit(g: int) -> Circuit:
    """Prepare the slack-augmented gradient state on the address register.

    Input convention: the unary register starts in |10...0> and the
    address register in |0>.  Each of the g splitting stages moves half
    the remaining weight one unary position down; the T/TDG pair after
    the CNOT cancels the e^(+-i pi/4) phases the SQRT_CNOT leaves, so
    all amplitudes stay real positive.  After the binary fan-out, the
    funnel (controlled on the address) routes the one-hot bit to
    position 0 where a final X clears it.
    """
    if g < 2:
        raise OutOfRange("circuit construction needs g >= 2")
    unary, address = circuit_wire_names(g)
    q = len(address)
    if len(unary) + q > WIRE_CAP:
        raise OutOfRange(
            f"g={g} needs {len(unary) + q} wires, over the cap of {WIRE_CAP}"
        )
    circ = Circuit(tuple(unary + address))

    # splitting ladder: stage k halves the amplitude at u_{k-1}
    for k in range(1, g + 1):
        circ.add("SQRT_CNOT", unary[k - 1], unary[k])
        circ.add("CNOT", unary[k], unary[k - 1])
        circ.add("TDG", unary[k - 1])
        circ.add("T", unary[k])

    # unary position -> binary label
    for m in range(1, g + 1):
        for b in range(q):
            if (m >> b) & 1:
                circ.add("CNOT", unary[m], address[b])

    # half permutation network: route the one-hot bit at position m to 0
    for b in reversed(range(q)):
        for i in range(2 ** b):
            circ.add("FREDKIN", address[b], unary[i], unary[i + 2 ** b])

    circ.add("X", unary[0])
    return circ
