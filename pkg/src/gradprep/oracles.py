"""Oracle models over a quantized bit matrix, and the reduction between them.

Two black-box flavors: the phase oracle flips the sign of |i>|j> when
bit A_ij is set; the digit oracle XOR-writes the whole g-bit word A_i
into a data register.  A digit oracle can emulate the phase oracle by
computing A_i, funneling the addressed bit to a fixed wire through a
Fredkin permutation network, applying one Z there, and uncomputing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .amplitudes import QuantizedAmplitudes
from .statesim import Circuit, StateVector


@dataclass
class OracleModel:
    """A black box materialized from a bit matrix, with a query counter."""

    kind: str
    bits: QuantizedAmplitudes
    query_count: int = 0

    def __post_init__(self):
        if self.kind not in ("phase_bit", "digit"):
            raise ValueError(f"unknown oracle kind {self.kind!r}")


def phase_oracle(q: QuantizedAmplitudes) -> OracleModel:
    return OracleModel(kind="phase_bit", bits=q)


def digit_oracle(q: QuantizedAmplitudes) -> OracleModel:
    return OracleModel(kind="digit", bits=q)


def _check_phase_state(state: StateVector, o: OracleModel) -> tuple[int, int]:
    n, g = o.bits.n_elements, o.bits.g
    if len(state.register_dims) != 2 or state.register_dims != (n, g):
        raise ValueError(
            f"phase oracle wants dims ({n}, {g}), got {state.register_dims}"
        )
    return n, g


def apply_phase_oracle(state: StateVector, o: OracleModel) -> StateVector:
    """Multiply amplitude (i, j) by (-1)^A_ij."""
    if o.kind != "phase_bit":
        raise ValueError("need a phase_bit oracle")
    _check_phase_state(state, o)
    signs = 1.0 - 2.0 * o.bits.bits.astype(float)
    o.query_count += 1
    return StateVector(state.amplitudes * signs.ravel(), state.register_dims)


def apply_partial_phase(state: StateVector, o: OracleModel, beta: float) -> StateVector:
    """Multiply amplitude (i, j) by e^(i beta A_ij); beta=pi is the full oracle.

    This is the partial-phase variant the fixed-point schedule drives; it
    costs one oracle query like the full flip (phase kickback on the same
    marking bit).
    """
    if o.kind != "phase_bit":
        raise ValueError("need a phase_bit oracle")
    _check_phase_state(state, o)
    phases = np.exp(1j * beta * o.bits.bits.astype(float))
    o.query_count += 1
    return StateVector(state.amplitudes * phases.ravel(), state.register_dims)


def apply_digit_oracle(state: StateVector, o: OracleModel) -> StateVector:
    """|i>|z>|j> -> |i>|z xor A_i>|j>; self-inverse."""
    if o.kind != "digit":
        raise ValueError("need a digit oracle")
    n, g = o.bits.n_elements, o.bits.g
    dims = state.register_dims
    if len(dims) != 3 or dims[0] != n or dims[1] != 2 ** g:
        raise ValueError(
            f"digit oracle wants dims ({n}, {2 ** g}, *), got {dims}"
        )
    tens = state.tensor()
    out = np.empty_like(tens)
    z = np.arange(2 ** g)
    for i, word in enumerate(o.bits.int_values):
        out[i] = tens[i, z ^ int(word), :]
    o.query_count += 1
    return StateVector(out.ravel(), dims)


# --- reversible comparator -------------------------------------------------

def comparator_cost(g: int) -> tuple[int, int]:
    """(Toffoli count, ancilla count) for the g-bit comparator."""
    return 2 * g, g + 1


def comparator(a: int, b: int, g: int) -> int:
    """Flag = 1 iff a >= b, via a reversible ripple-borrow chain.

    Simulates the gate sequence on classical bits: copy b, toggle a to
    its complement, run the Cuccaro majority chain (one Toffoli each),
    copy out the final borrow, and unwind.  Verifies that every input
    bit is restored before returning.
    """
    if not (0 <= a < 2 ** g and 0 <= b < 2 ** g):
        raise ValueError(f"operands must be g-bit values for g={g}")
    A = [(a >> i) & 1 for i in range(g)]       # toggled below to ~a
    B = [0] * g                                # ancilla copy of b
    c0 = 0                                     # borrow seed
    flag = 0
    toffoli = 0

    for i in range(g):                         # CNOT fan-out copy
        B[i] ^= (b >> i) & 1
    for i in range(g):                         # X: A holds ~a
        A[i] ^= 1

    # majority chain: slot A[i] accumulates borrow_{i+1}
    def maj(c_val, i):
        nonlocal toffoli
        B[i] ^= A[i]
        c_new = c_val ^ A[i]
        A[i] ^= B[i] & c_new
        toffoli += 1
        return c_new

    # inverse majority; needs the same carry value maj used
    def uma(c_val, i):
        nonlocal toffoli
        A[i] ^= B[i] & c_val
        B[i] ^= A[i]
        toffoli += 1

    carries = [c0]
    for i in range(g):
        # previous chain slot feeds the next majority
        prev = A[i - 1] if i else c0
        carries.append(maj(prev, i))
    # A[g-1] now holds borrow_g; a >= b iff no borrow
    flag ^= A[g - 1]
    flag ^= 1

    for i in reversed(range(g)):
        uma(carries[i + 1], i)
    for i in range(g):
        A[i] ^= 1
    for i in range(g):
        B[i] ^= (b >> i) & 1

    restored = sum(bit << i for i, bit in enumerate(A))
    if restored != a or any(B) or toffoli != 2 * g:
        raise AssertionError("comparator failed to uncompute cleanly")
    return flag


# --- permutation network ---------------------------------------------------

def _xor_half(q: int, data: list[str], addr: list[str]) -> list[tuple[str, ...]]:
    """Full butterfly routing half: layer b swaps i <-> i + 2^b for bit-b-clear i."""
    gates = []
    for b in reversed(range(q)):
        for i in range(2 ** q):
            if not (i >> b) & 1:
                gates.append(("FREDKIN", addr[b], data[i], data[i + 2 ** b]))
    return gates


def _prune_half(gates, live_wires: set[str]):
    """Drop swaps outside the backward light cone of the given data wires."""
    live = set(live_wires)
    kept = []
    for name, ctrl, w1, w2 in reversed(gates):
        if w1 in live or w2 in live:
            live.update((w1, w2))
            kept.append((name, ctrl, w1, w2))
    kept.reverse()
    return kept


def build_permutation_network(q: int, optimize: bool = True) -> Circuit:
    """Fredkin network applying Z to the x-th data qubit for address |x>.

    Data register: 2^q qubits d0..d_{2^q-1}; address register: q qubits
    a0..a_{q-1}.  Forward half routes position x to 0, a Z fires there,
    the mirrored half restores every position.  With optimize=True the
    swaps outside the Z's light cone are removed, leaving 2(2^q - 1)
    Fredkins.
    """
    if q < 1:
        raise ValueError("need at least one address qubit")
    data = [f"d{i}" for i in range(2 ** q)]
    addr = [f"a{b}" for b in range(q)]
    half = _xor_half(q, data, addr)
    if optimize:
        half = _prune_half(half, {data[0]})
    circ = Circuit(tuple(data + addr))
    for gate in half:
        circ.add(*gate)
    circ.add("Z", data[0])
    for gate in reversed(half):
        circ.add(*gate)
    return circ


# --- phase oracle out of the digit oracle ----------------------------------

def _swap_bit_perm(width: int, pos_a: int, pos_b: int) -> np.ndarray:
    """Permutation of [0, 2^width) exchanging data-wire bits pos_a and pos_b.

    Data wire k holds integer bit (width - 1 - k), keeping wire 0 the
    most significant position.
    """
    z = np.arange(2 ** width)
    ba, bb = width - 1 - pos_a, width - 1 - pos_b
    va = (z >> ba) & 1
    vb = (z >> bb) & 1
    out = z & ~(1 << ba) & ~(1 << bb)
    return out | (vb << ba) | (va << bb)


@dataclass
class EmulatedPhaseOracle:
    """Phase-oracle action realized as Uamp, network, Z, inverse, Uamp.

    Each .apply() counts one round query and advances the underlying
    digit oracle's counter by two (compute + uncompute).
    """

    digit: OracleModel
    network: Circuit = field(init=False)
    round_queries: int = 0

    def __post_init__(self):
        if self.digit.kind != "digit":
            raise ValueError("need a digit oracle")
        g = self.digit.bits.g
        self._q = max(1, math.ceil(math.log2(g))) if g > 1 else 0
        self._width = max(g, 2 ** self._q)
        if self._q > 0:
            self.network = build_permutation_network(self._q)
        else:
            net = Circuit(("d0",))
            net.add("Z", "d0")
            self.network = net

    def apply(self, state: StateVector) -> StateVector:
        bits = self.digit.bits
        n, g = bits.n_elements, bits.g
        dims = state.register_dims
        padded = max(1, 2 ** self._q)
        if len(dims) != 2 or dims[0] != n or dims[1] not in (g, padded):
            raise ValueError(
                f"emulated phase oracle wants dims ({n}, {g}) or ({n}, {padded}), got {dims}"
            )
        width = self._width
        adim = max(1, 2 ** self._q)
        tens = state.tensor()

        # attach |0...0> data word, pad the address register
        psi = np.zeros((n, 2 ** width, adim), dtype=complex)
        psi[:, 0, : dims[1]] = tens

        # data-wire words: wire k carries A_ik, pad wires stay zero
        words = bits.int_values.astype(np.int64) << (width - g)

        def xor_words(arr):
            out = np.empty_like(arr)
            z = np.arange(2 ** width)
            for i in range(n):
                out[i] = arr[i][z ^ int(words[i]), :]
            self.digit.query_count += 1
            return out

        def run_gates(arr, gates):
            x = np.arange(adim)
            top_bit = ((np.arange(2 ** width) >> (width - 1)) & 1) == 1
            for gate in gates:
                if gate.name == "Z":
                    # data wire 0 = most significant data bit
                    arr[:, top_bit, :] *= -1.0
                elif gate.name == "FREDKIN":
                    b = int(gate.wires[0][1:])
                    i = int(gate.wires[1][1:])
                    j = int(gate.wires[2][1:])
                    perm = _swap_bit_perm(width, i, j)
                    on = ((x >> b) & 1) == 1
                    arr[:, :, on] = arr[:, perm][:, :, on]
                else:
                    raise AssertionError(f"unexpected network gate {gate.name}")
            return arr

        psi = xor_words(psi)
        psi = run_gates(psi, self.network.gates)
        psi = xor_words(psi)

        # the data register must come back clean and unentangled
        data_rest = np.linalg.norm(psi[:, 1:, :])
        if data_rest > 1e-10:
            raise AssertionError("data register left entangled after emulation")
        out = psi[:, 0, : dims[1]]
        self.round_queries += 1
        return StateVector(out.ravel(), dims)


def phase_oracle_from_digit(o: OracleModel) -> EmulatedPhaseOracle:
    """Composite operation equivalent to the phase oracle on [N, g] states."""
    return EmulatedPhaseOracle(digit=o)
