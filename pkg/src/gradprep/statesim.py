"""Dense complex statevector engine over composite registers.

States live on an ordered list of subsystems of arbitrary dimension
(e.g. [N, g] for an index register next to a bit-position register, or
[2]*n for a qubit circuit).  A small gate-level simulator with a fixed
gate set handles circuit verification at desk scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import OutOfRange

# Gate-level simulation is for primitive verification only; anything
# bigger belongs in the subspace/product-space code paths.
WIRE_CAP = 24

_SQ2 = 1.0 / math.sqrt(2.0)
_T_PHASE = np.exp(1j * math.pi / 4)


def _controlled(u: np.ndarray, n_controls: int = 1) -> np.ndarray:
    """Block-embed u as a controlled gate with the controls first."""
    dim = u.shape[0] << n_controls
    out = np.eye(dim, dtype=complex)
    out[dim - u.shape[0]:, dim - u.shape[0]:] = u
    return out


_X = np.array([[0, 1], [1, 0]], dtype=complex)
_SQRT_X = 0.5 * np.array([[1 + 1j, 1 - 1j], [1 - 1j, 1 + 1j]])
_SWAP = np.array(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
)
_SQRT_SWAP = np.array(
    [
        [1, 0, 0, 0],
        [0, 0.5 * (1 + 1j), 0.5 * (1 - 1j), 0],
        [0, 0.5 * (1 - 1j), 0.5 * (1 + 1j), 0],
        [0, 0, 0, 1],
    ],
    dtype=complex,
)

GATE_MATRICES: dict[str, np.ndarray] = {
    "H": np.array([[_SQ2, _SQ2], [_SQ2, -_SQ2]], dtype=complex),
    "X": _X,
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
    "T": np.array([[1, 0], [0, _T_PHASE]], dtype=complex),
    "TDG": np.array([[1, 0], [0, np.conj(_T_PHASE)]], dtype=complex),
    "CNOT": _controlled(_X),
    "CS": np.diag([1, 1, 1, 1j]).astype(complex),
    "TOFFOLI": _controlled(_X, 2),
    "FREDKIN": _controlled(_SWAP),
    "SQRT_SWAP": _SQRT_SWAP,
    "SQRT_CNOT": _controlled(_SQRT_X),
}

GATE_ARITY: dict[str, int] = {
    "H": 1, "X": 1, "Z": 1, "T": 1, "TDG": 1,
    "CNOT": 2, "CS": 2, "SQRT_CNOT": 2, "SQRT_SWAP": 2,
    "TOFFOLI": 3, "FREDKIN": 3,
}


@dataclass(frozen=True)
class StateVector:
    """Normalized complex amplitudes over a composite register."""

    amplitudes: np.ndarray
    register_dims: tuple[int, ...]

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex).ravel()
        dims = tuple(int(d) for d in self.register_dims)
        if any(d < 1 for d in dims):
            raise ValueError(f"register dims must be positive, got {dims}")
        if amps.size != math.prod(dims):
            raise ValueError(
                f"{amps.size} amplitudes do not fill registers {dims}"
            )
        object.__setattr__(self, "amplitudes", amps)
        object.__setattr__(self, "register_dims", dims)

    @property
    def n_registers(self) -> int:
        return len(self.register_dims)

    def tensor(self) -> np.ndarray:
        return self.amplitudes.reshape(self.register_dims)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def normalized(self) -> "StateVector":
        n = self.norm()
        if n == 0.0:
            raise ValueError("cannot normalize a zero state")
        return StateVector(self.amplitudes / n, self.register_dims)


def basis_state(register_dims, labels) -> StateVector:
    """|labels> in a composite register, e.g. basis_state([4, 2], (3, 0))."""
    dims = tuple(int(d) for d in register_dims)
    labels = tuple(int(x) for x in labels)
    if len(labels) != len(dims):
        raise ValueError("one label per register required")
    for x, d in zip(labels, dims):
        if not 0 <= x < d:
            raise ValueError(f"label {x} outside register of dimension {d}")
    amps = np.zeros(math.prod(dims), dtype=complex)
    amps[int(np.ravel_multi_index(labels, dims))] = 1.0
    return StateVector(amps, dims)


def product_state(factors) -> StateVector:
    """Tensor product of per-register amplitude vectors or StateVectors."""
    arrays = []
    dims: list[int] = []
    for f in factors:
        if isinstance(f, StateVector):
            arrays.append(f.amplitudes)
            dims.extend(f.register_dims)
        else:
            arrays.append(np.asarray(f, dtype=complex).ravel())
            dims.append(arrays[-1].size)
    amps = arrays[0]
    for a in arrays[1:]:
        amps = np.kron(amps, a)
    return StateVector(amps, tuple(dims))


def apply_unitary(state: StateVector, u: np.ndarray, target) -> StateVector:
    """Apply operator u to one register (int) or several (sequence of ints).

    Multi-register targets may be non-adjacent; u's dimension must equal
    the product of the targeted register dimensions, ordered as given.
    """
    targets = (target,) if isinstance(target, (int, np.integer)) else tuple(target)
    dims = state.register_dims
    for t in targets:
        if not 0 <= t < len(dims):
            raise ValueError(f"no register {t} in dims {dims}")
    if len(set(targets)) != len(targets):
        raise ValueError("duplicate target register")
    u = np.asarray(u, dtype=complex)
    block = math.prod(dims[t] for t in targets)
    if u.shape != (block, block):
        raise ValueError(
            f"operator shape {u.shape} does not match target dims {block}"
        )
    tens = state.tensor()
    moved = np.moveaxis(tens, targets, range(len(targets)))
    kept = moved.shape[len(targets):]
    out = u @ moved.reshape(block, -1)
    out = np.moveaxis(out.reshape(moved.shape), range(len(targets)), targets)
    result = StateVector(out.ravel(), dims)
    if abs(result.norm() - state.norm()) > 1e-10:
        raise ValueError("operator application broke the norm; not unitary?")
    return result


def overlap(a: StateVector, b: StateVector) -> complex:
    """Inner product <a|b>."""
    if a.register_dims != b.register_dims:
        raise ValueError(
            f"register mismatch: {a.register_dims} vs {b.register_dims}"
        )
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def reduced_density(state: StateVector, keep) -> np.ndarray:
    """Density matrix of the kept registers after tracing out the rest."""
    keep = (keep,) if isinstance(keep, (int, np.integer)) else tuple(keep)
    dims = state.register_dims
    rest = [i for i in range(len(dims)) if i not in keep]
    tens = np.moveaxis(state.tensor(), keep, range(len(rest), len(dims)))
    k = math.prod(dims[i] for i in keep)
    mat = tens.reshape(-1, k)
    return mat.T @ mat.conj()


@dataclass
class Gate:
    name: str
    wires: tuple[str, ...]


@dataclass
class Circuit:
    """Ordered gate list over named wires, fixed gate set."""

    wires: tuple[str, ...]
    gates: list[Gate] = field(default_factory=list)

    def __post_init__(self):
        self.wires = tuple(self.wires)
        if len(set(self.wires)) != len(self.wires):
            raise ValueError("duplicate wire names")

    def add(self, name: str, *wires: str) -> None:
        if name not in GATE_ARITY:
            raise ValueError(f"unknown gate {name}")
        if len(wires) != GATE_ARITY[name]:
            raise ValueError(
                f"{name} takes {GATE_ARITY[name]} wires, got {len(wires)}"
            )
        for w in wires:
            if w not in self.wires:
                raise ValueError(f"wire {w} not declared")
        if len(set(wires)) != len(wires):
            raise ValueError("gate wires must be distinct")
        self.gates.append(Gate(name, tuple(wires)))

    def count(self, name: str) -> int:
        return sum(1 for gt in self.gates if gt.name == name)

    def inverse(self) -> "Circuit":
        """Reversed circuit with each gate inverted (T <-> TDG)."""
        inv = {"T": "TDG", "TDG": "T"}
        out = Circuit(self.wires)
        for gt in reversed(self.gates):
            name = inv.get(gt.name, gt.name)
            if name in ("SQRT_SWAP", "SQRT_CNOT", "CS"):
                raise ValueError(f"no named inverse for {name} in the gate set")
            out.add(name, *gt.wires)
        return out

    def extend(self, other: "Circuit") -> None:
        for gt in other.gates:
            self.add(gt.name, *gt.wires)

    def dump(self) -> str:
        """Line-oriented text format: one `GATE wire[,wire...]` per line."""
        return "\n".join(f"{g.name} {','.join(g.wires)}" for g in self.gates) + "\n"

    @classmethod
    def parse(cls, text: str, wires=None) -> "Circuit":
        """Rebuild a circuit from dump() output.

        Wires default to first-appearance order, which keeps
        dump/parse round trips deterministic.
        """
        entries = []
        seen: list[str] = []
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            name, _, rest = line.partition(" ")
            ws = tuple(w.strip() for w in rest.split(",") if w.strip())
            entries.append((name, ws))
            for w in ws:
                if w not in seen:
                    seen.append(w)
        circ = cls(tuple(wires) if wires is not None else tuple(seen))
        for name, ws in entries:
            circ.add(name, *ws)
        return circ


def simulate_circuit(circuit: Circuit, state: StateVector) -> StateVector:
    """Run a qubit circuit; wire order must match the state's registers."""
    n = len(circuit.wires)
    if n > WIRE_CAP:
        raise OutOfRange(f"{n} wires exceed the simulation cap of {WIRE_CAP}")
    if state.register_dims != (2,) * n:
        raise ValueError(
            f"state dims {state.register_dims} are not {n} qubits"
        )
    index = {w: i for i, w in enumerate(circuit.wires)}
    for gate in circuit.gates:
        targets = tuple(index[w] for w in gate.wires)
        state = apply_unitary(state, GATE_MATRICES[gate.name], targets)
    return state
