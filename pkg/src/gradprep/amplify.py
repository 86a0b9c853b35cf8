"""Fixed-point amplitude amplification and the two-stage loading protocol.

Stage 1 amplifies an easy-to-prepare product state onto the intermediate
target encoded across the index and precision registers.  Stage 2 projects
the precision register onto the gradient state, either by postselection or
by a nested round of amplification.  Phase schedules follow the
Chebyshev-polynomial fixed-point construction, so the success probability
obeys an explicit floor of 1 - delta^2 whenever the initial overlap is at
least the planned one.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .amplitudes import QuantizedAmplitudes, bit_weights, normalize
from .errors import BoundInvalid, NoOverlap, OutOfRange, ZeroVector
from .gradient import gradient_state
from .oracles import OracleModel, apply_partial_phase, phase_oracle
from .statesim import StateVector, product_state

_OVERLAP_FLOOR = 1e-15


def _ceil_odd(x: float) -> int:
    rounds = max(1, math.ceil(x))
    return rounds if rounds % 2 == 1 else rounds + 1


@dataclass(frozen=True)
class StagePlan:
    """Round budget for one fixed-point amplification stage."""

    overlap: float
    delta: float
    rounds: int

    def __post_init__(self):
        if not 0.0 < self.overlap <= 1.0 + 1e-12:
            raise OutOfRange(f"overlap must be in (0, 1], got {self.overlap}")
        if not 0.0 < self.delta < 1.0:
            raise OutOfRange(f"delta must be in (0, 1), got {self.delta}")
        if self.rounds < 1 or self.rounds % 2 == 0:
            raise OutOfRange(f"rounds must be a positive odd integer, got {self.rounds}")

    @classmethod
    def for_overlap(cls, overlap: float, delta: float) -> "StagePlan":
        """Smallest odd round count with rounds >= ln(2/delta)/sqrt(overlap)."""
        if not 0.0 < overlap <= 1.0 + 1e-12:
            raise OutOfRange(f"overlap must be in (0, 1], got {overlap}")
        if not 0.0 < delta < 1.0:
            raise OutOfRange(f"delta must be in (0, 1), got {delta}")
        return cls(overlap, delta, _ceil_odd(math.log(2.0 / delta) / math.sqrt(overlap)))


def chebyshev_t(n: int, x: float) -> float:
    """First-kind Chebyshev polynomial, stable on and off [-1, 1]."""
    if abs(x) <= 1.0:
        return math.cos(n * math.acos(x))
    value = math.cosh(n * math.acosh(abs(x)))
    return value if x > 0 or n % 2 == 0 else -value


def fixed_point_phases(rounds: int, delta: float) -> tuple[np.ndarray, np.ndarray]:
    """Source/target phase schedules (alpha_j, beta_j) for an odd round count."""
    if rounds < 1 or rounds % 2 == 0:
        raise OutOfRange(f"rounds must be a positive odd integer, got {rounds}")
    half = (rounds - 1) // 2
    if half == 0:
        return np.zeros(0), np.zeros(0)
    gamma_inv = math.cosh(math.acosh(1.0 / delta) / rounds)
    scale = math.sqrt(1.0 - 1.0 / gamma_inv**2)
    alphas = np.array(
        [2.0 * math.atan2(1.0, math.tan(2.0 * math.pi * j / rounds) * scale) for j in range(1, half + 1)]
    )
    betas = -alphas[::-1]
    return alphas, betas


def success_floor(plan: StagePlan) -> float:
    """Guaranteed success probability 1 - delta^2 T_L(gamma^-1 sqrt(1-overlap))^2."""
    gamma_inv = math.cosh(math.acosh(1.0 / plan.delta) / plan.rounds)
    cheb = chebyshev_t(plan.rounds, gamma_inv * math.sqrt(max(0.0, 1.0 - plan.overlap)))
    return max(0.0, 1.0 - plan.delta**2 * cheb**2)


@dataclass
class PreparedState:
    """Source state plus a call counter; each phased reflection costs two
    preparation-circuit invocations (prepare, then unprepare)."""

    state: StateVector
    prep_calls: int = 0

    def apply_source_phase(self, state: StateVector, alpha: float) -> StateVector:
        if state.register_dims != self.state.register_dims:
            raise ValueError("state dims do not match the prepared source")
        source = self.state.amplitudes
        coeff = (1.0 - np.exp(-1j * alpha)) * np.vdot(source, state.amplitudes)
        self.prep_calls += 2
        return StateVector(state.amplitudes - coeff * source, state.register_dims)


def diffusion_reflection(prep: PreparedState, state: StateVector) -> StateVector:
    """Standard inversion about the source, 2|s><s| - 1."""
    source = prep.state.amplitudes
    out = 2.0 * np.vdot(source, state.amplitudes) * source - state.amplitudes
    prep.prep_calls += 2
    return StateVector(out, state.register_dims)


class PhaseBitMarker:
    """Marks basis states whose oracle bit is set, via partial phase queries."""

    def __init__(self, oracle: OracleModel):
        if oracle.kind != "phase_bit":
            raise ValueError(f"need a phase_bit oracle, got {oracle.kind!r}")
        self.oracle = oracle

    def overlap_sq(self, state: StateVector) -> float:
        table = self.oracle.bits
        tens = state.amplitudes.reshape(state.register_dims)
        if tens.shape[:2] != (table.n_elements, table.g):
            raise ValueError("state dims do not match the oracle bit table")
        mask = table.bits.astype(bool)
        return float(np.sum(np.abs(tens[mask]) ** 2))

    def partial_phase(self, state: StateVector, beta: float) -> StateVector:
        return apply_partial_phase(state, self.oracle, beta)


class AddressMarker:
    """Marks the subspace where a designated register equals a fixed state."""

    def __init__(self, address: np.ndarray, axis: int = 1):
        address = np.asarray(address, dtype=complex)
        norm = np.linalg.norm(address)
        if norm < _OVERLAP_FLOOR:
            raise ZeroVector("address state has zero norm")
        self.address = address / norm
        self.axis = axis

    def _project(self, state: StateVector) -> np.ndarray:
        tens = np.moveaxis(state.amplitudes.reshape(state.register_dims), self.axis, -1)
        return tens @ self.address.conj()

    def overlap_sq(self, state: StateVector) -> float:
        return float(np.sum(np.abs(self._project(state)) ** 2))

    def partial_phase(self, state: StateVector, beta: float) -> StateVector:
        tens = np.moveaxis(state.amplitudes.reshape(state.register_dims), self.axis, -1)
        coeffs = tens @ self.address.conj()
        tens = tens + (np.exp(1j * beta) - 1.0) * coeffs[..., None] * self.address
        out = np.moveaxis(tens, -1, self.axis)
        return StateVector(out.ravel(), state.register_dims)


class VectorMarker:
    """Rank-one marker for a single target state."""

    def __init__(self, target: StateVector):
        self.target = target

    def overlap_sq(self, state: StateVector) -> float:
        return float(abs(np.vdot(self.target.amplitudes, state.amplitudes)) ** 2)

    def partial_phase(self, state: StateVector, beta: float) -> StateVector:
        coeff = (np.exp(1j * beta) - 1.0) * np.vdot(self.target.amplitudes, state.amplitudes)
        return StateVector(state.amplitudes + coeff * self.target.amplitudes, state.register_dims)


def fixed_point_amplify(
    initial: StateVector,
    marker,
    plan: StagePlan,
    prep: PreparedState | None = None,
) -> StateVector:
    """Run the fixed-point schedule; the result overlaps the marked subspace
    with probability at least 1 - delta^2 provided the initial overlap is at
    least plan.overlap."""
    actual = marker.overlap_sq(initial)
    if actual < _OVERLAP_FLOOR:
        raise NoOverlap("initial state has no overlap with the marked subspace")
    if actual + 1e-9 < plan.overlap:
        warnings.warn(
            f"initial overlap {actual:.3g} is below the planned {plan.overlap:.3g}; "
            "the success floor no longer applies",
            BoundInvalid,
        )
    if prep is None:
        prep = PreparedState(initial)
    alphas, betas = fixed_point_phases(plan.rounds, plan.delta)
    state = initial
    for alpha, beta in zip(alphas, betas):
        state = marker.partial_phase(state, beta)
        state = prep.apply_source_phase(state, alpha)
    return state


def uniform_initial_state(n_elements: int, g: int) -> StateVector:
    """Uniform index register tensored with the gradient precision register."""
    index = np.full(n_elements, 1.0 / math.sqrt(n_elements))
    return product_state([StateVector(index, (n_elements,)), gradient_state(g)])


def intermediate_target(quantized: QuantizedAmplitudes) -> StateVector:
    """Joint index/precision state whose set-bit amplitudes are the square
    roots of the binary digit weights, normalised by the quantized 1-norm."""
    l1 = quantized.norms().l1
    if l1 <= 0.0:
        raise ZeroVector("all quantized amplitudes are zero")
    weights = np.sqrt(bit_weights(quantized.g) / l1)
    tens = quantized.bits.astype(float) * weights
    return StateVector(tens.ravel(), (quantized.n_elements, quantized.g))


def stage_overlaps(quantized: QuantizedAmplitudes) -> tuple[float, float]:
    """Exact overlaps (lambda1, lambda2) for the plain two-stage protocol."""
    n, g = quantized.n_elements, quantized.g
    norms = quantized.norms()
    if norms.l1 <= 0.0:
        raise ZeroVector("all quantized amplitudes are zero")
    boost = 2**g / (2**g - 1.0)
    lambda1 = norms.l1 / n * boost
    lambda2 = boost * norms.l2**2 / norms.l1
    return lambda1, lambda2


@dataclass
class RunReport:
    """Summary of one simulated loading run."""

    n: int
    g: int
    scale_shift: int
    bootstrap: bool
    mode: str
    delta1: float
    delta2: float
    lambda1: float
    lambda2: float
    lambda1_prime: float
    L1: int
    L2: int
    L: int
    L_prime: int
    l_core: int
    lp_core: int
    fidelity_stage1: float
    final_fidelity: float
    success_probability: float
    queries: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        out = dict(self.__dict__)
        out["queries"] = dict(self.queries)
        return out


def _default_delta1(g: int, alpha_l1: float) -> float:
    value = 2.0 ** ((1 - g) / 2.0) * math.sqrt(max(alpha_l1, 0.0))
    return min(max(value, 1e-12), 0.5)


def _resolve_alpha_l1(quantized: QuantizedAmplitudes, alpha: np.ndarray | None) -> float:
    if alpha is None:
        return quantized.norms().l1
    unit = normalize(np.asarray(alpha, dtype=float))
    return float(np.sum(unit.values)) * 2**quantized.scale_shift


def load_state(
    quantized: QuantizedAmplitudes,
    delta1: float | None = None,
    delta2: float = 0.5,
    bootstrap: bool = False,
    mode: str = "postselect",
    profile=None,
    alpha: np.ndarray | None = None,
) -> tuple[StateVector, RunReport]:
    """Simulate the full loading protocol and return the conditional index
    state together with a run report.

    Stage 1 amplifies either the uniform product start or, with
    ``bootstrap=True``, the bit-average optimized start.  Stage 2 either
    postselects the precision register onto the gradient state (``mode=
    "postselect"``, zero extra rounds) or nests a second amplification
    (``mode="amplify"``).  ``L1``/``L2`` count executed rounds; ``L`` and
    ``L_prime`` are the scheduled nested totals without and with the
    optimized start.  ``alpha`` (the unquantized amplitudes, if known)
    only sharpens the default ``delta1``.
    """
    if mode not in ("postselect", "amplify"):
        raise OutOfRange(f"mode must be 'postselect' or 'amplify', got {mode!r}")
    n, g = quantized.n_elements, quantized.g
    lambda1, lambda2 = stage_overlaps(quantized)
    alpha_l1 = _resolve_alpha_l1(quantized, alpha)
    if delta1 is None:
        delta1 = _default_delta1(g, alpha_l1)

    from .bootstrap import average_bit_weights, lambda1_prime, optimized_initial_state

    exact_profile = profile if profile is not None else average_bit_weights(quantized)
    lam1p = lambda1_prime(quantized, exact_profile)

    oracle = phase_oracle(quantized)
    marker = PhaseBitMarker(oracle)
    if bootstrap:
        initial, prep = optimized_initial_state(exact_profile, n)
    else:
        initial = uniform_initial_state(n, g)
        prep = PreparedState(initial)

    lam_used = marker.overlap_sq(initial)
    plan1 = StagePlan.for_overlap(lam_used, delta1)
    omega = intermediate_target(quantized)
    state1 = fixed_point_amplify(initial, marker, plan1, prep)
    fidelity_stage1 = min(1.0, float(abs(np.vdot(omega.amplitudes, state1.amplitudes)) ** 2))

    grad = gradient_state(g).amplitudes
    projector = AddressMarker(grad, axis=1)
    plan2 = StagePlan.for_overlap(min(1.0, projector.overlap_sq(state1)), delta2)
    if mode == "amplify":
        prep2 = PreparedState(state1)
        state2 = fixed_point_amplify(state1, projector, plan2, prep2)
        executed_l2 = plan2.rounds
    else:
        state2 = state1
        executed_l2 = 0

    tens = state2.amplitudes.reshape(n, -1)
    coeffs = tens @ grad.conj()
    success = float(np.sum(np.abs(coeffs) ** 2))
    if success < _OVERLAP_FLOOR:
        raise NoOverlap("no weight left on the gradient branch after stage 2")
    index_state = StateVector(coeffs / math.sqrt(success), (n,))

    target = quantized.values / quantized.norms().l2
    final_fidelity = min(1.0, float(abs(np.vdot(target, index_state.amplitudes)) ** 2))

    plan1_plain = StagePlan.for_overlap(lambda1, delta1)
    plan1_boot = StagePlan.for_overlap(lam1p, delta1)
    plan2_sched = StagePlan.for_overlap(lambda2, delta2)
    report = RunReport(
        n=n,
        g=g,
        scale_shift=quantized.scale_shift,
        bootstrap=bootstrap,
        mode=mode,
        delta1=delta1,
        delta2=delta2,
        lambda1=lambda1,
        lambda2=lambda2,
        lambda1_prime=lam1p,
        L1=plan1.rounds,
        L2=executed_l2,
        L=plan1_plain.rounds * plan2_sched.rounds,
        L_prime=plan1_boot.rounds * plan2_sched.rounds,
        l_core=math.ceil(1.0 / math.sqrt(lambda1 * lambda2)),
        lp_core=math.ceil(1.0 / math.sqrt(lam1p * lambda2)),
        fidelity_stage1=fidelity_stage1,
        final_fidelity=final_fidelity,
        success_probability=success,
        queries={
            "phase_oracle": oracle.query_count,
            "state_preparation": prep.prep_calls,
            "nested_equivalent": plan1.rounds * max(1, executed_l2),
        },
    )
    return index_state, report


@dataclass(frozen=True)
class RuntimeBounds:
    """Closed-form round-count bounds; ``valid`` records the precondition
    x = 2^-g N / l1 < 1/2 under which they are guaranteed."""

    basic: float
    resolved: float
    x: float
    valid: bool


def runtime_bounds(
    quantized: QuantizedAmplitudes,
    alpha: np.ndarray | None = None,
    delta1: float | None = None,
    delta2: float = 0.5,
) -> RuntimeBounds:
    """Evaluate log2(2/d1) log2(2/d2) (sqrt(N) + 1/2) and the form obtained
    by substituting the default delta1, using the quantized 1-norm when the
    unquantized amplitudes are not supplied."""
    n, g = quantized.n_elements, quantized.g
    alpha_l1 = _resolve_alpha_l1(quantized, alpha)
    if alpha_l1 <= 0.0:
        raise ZeroVector("amplitudes have zero 1-norm")
    if delta1 is None:
        delta1 = _default_delta1(g, alpha_l1)
    x = 2.0**-g * n / alpha_l1
    valid = x < 0.5
    if not valid:
        warnings.warn(
            f"precondition x = 2^-g N / l1 = {x:.3g} >= 1/2; bounds are not guaranteed",
            BoundInvalid,
        )
    scale = math.sqrt(n) + 0.5
    basic = math.log2(2.0 / delta1) * math.log2(2.0 / delta2) * scale
    resolved = math.log2(2.0 / delta2) * 0.5 * (1.0 + g - math.log2(alpha_l1)) * scale
    return RuntimeBounds(basic=basic, resolved=resolved, x=x, valid=valid)
