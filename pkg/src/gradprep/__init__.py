"""Gradient-state black-box quantum state preparation toolkit.

Quantizes amplitude vectors into bit matrices, simulates the two-stage
fixed-point amplitude-amplification loading protocol (optionally with the
bit-average bootstrapped start), counts oracle circuit resources, and
sweeps benchmark distributions for runtime scaling.
"""

from .amplitudes import (
    AmplitudeVector,
    QuantizedAmplitudes,
    bit_weights,
    normalize,
    quantize,
    shift_exponent,
    trace_distance_bound,
)
from .amplify import (
    PreparedState,
    RunReport,
    RuntimeBounds,
    StagePlan,
    diffusion_reflection,
    fixed_point_amplify,
    fixed_point_phases,
    intermediate_target,
    load_state,
    runtime_bounds,
    stage_overlaps,
    success_floor,
    uniform_initial_state,
)
from .bootstrap import (
    BitWeightProfile,
    average_bit_weights,
    bootstrap_slowdown_ratio,
    estimate_bit_weights,
    lambda1_prime,
    optimized_initial_state,
    runtime_bound_prime,
)
from .distributions import (
    DistributionSpec,
    ScalingReport,
    core_rounds,
    generate,
    harmonic_number,
    scaling_check,
)
from .errors import BoundInvalid, NoOverlap, OutOfRange, ZeroVector
from .gradient import (
    GradientSpec,
    build_gradient_circuit,
    gradient_state,
    slack_gradient_state,
)
from .oracles import (
    EmulatedPhaseOracle,
    OracleModel,
    apply_digit_oracle,
    apply_partial_phase,
    apply_phase_oracle,
    build_permutation_network,
    comparator,
    comparator_cost,
    digit_oracle,
    phase_oracle,
    phase_oracle_from_digit,
)
from .resources import ResourceTally, mcx_t_cost, tally_from_circuit, tally_variant
from .statesim import (
    Circuit,
    Gate,
    StateVector,
    apply_unitary,
    basis_state,
    overlap,
    product_state,
    reduced_density,
    simulate_circuit,
)

__version__ = "0.1.0"
