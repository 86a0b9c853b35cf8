import itertools
import math

import numpy as np
import pytest

from gradprep.amplitudes import AmplitudeVector, QuantizedAmplitudes, normalize, quantize
from gradprep.oracles import (
    EmulatedPhaseOracle,
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
from gradprep.gradient import gradient_state
from gradprep.statesim import StateVector, basis_state, product_state, simulate_circuit


def _random_quantized(rng, n, g):
    while True:
        alpha = normalize(rng.uniform(0.0, 1.0, size=n))
        q = quantize(alpha, g)
        if q.norms().l1 > 0:
            return q


def test_phase_oracle_sign_flip():
    q = QuantizedAmplitudes(bits=np.array([[1], [0]]), g=1)
    o = phase_oracle(q)
    s = StateVector(np.array([1.0, 1.0]) / math.sqrt(2), (2, 1))
    out = apply_phase_oracle(s, o)
    assert np.allclose(out.amplitudes, [-1 / math.sqrt(2), 1 / math.sqrt(2)])
    assert o.query_count == 1


def test_phase_oracle_all_zero_is_identity():
    q = QuantizedAmplitudes(bits=np.zeros((3, 2), dtype=int), g=2)
    o = phase_oracle(q)
    s = StateVector(np.full(6, 1 / math.sqrt(6)), (3, 2))
    out = apply_phase_oracle(s, o)
    assert np.allclose(out.amplitudes, s.amplitudes)


def test_phase_oracle_self_inverse():
    rng = np.random.default_rng(3)
    q = _random_quantized(rng, 8, 3)
    o = phase_oracle(q)
    amps = rng.normal(size=24) + 1j * rng.normal(size=24)
    amps /= np.linalg.norm(amps)
    s = StateVector(amps, (8, 3))
    back = apply_phase_oracle(apply_phase_oracle(s, o), o)
    assert np.allclose(back.amplitudes, s.amplitudes, atol=1e-12)
    assert o.query_count == 2


def test_phase_oracle_wrong_dims():
    q = QuantizedAmplitudes(bits=np.array([[1, 0]]), g=2)
    o = phase_oracle(q)
    with pytest.raises(ValueError):
        apply_phase_oracle(basis_state([2, 2], (0, 0)), o)
    with pytest.raises(ValueError):
        apply_digit_oracle(basis_state([1, 4, 2], (0, 0, 0)), o)


def test_partial_phase_at_pi_matches_full_oracle():
    rng = np.random.default_rng(4)
    q = _random_quantized(rng, 4, 2)
    s = StateVector(np.full(8, 1 / math.sqrt(8)), (4, 2))
    full = apply_phase_oracle(s, phase_oracle(q))
    partial = apply_partial_phase(s, phase_oracle(q), math.pi)
    assert np.allclose(full.amplitudes, partial.amplitudes, atol=1e-12)


def test_digit_oracle_writes_words():
    q = quantize(AmplitudeVector([0.8, 0.6]), 3)  # words 6 and 4
    o = digit_oracle(q)
    for i, word in enumerate((6, 4)):
        s = basis_state([2, 8, 3], (i, 0, 0))
        out = apply_digit_oracle(s, o)
        assert np.allclose(out.amplitudes, basis_state([2, 8, 3], (i, word, 0)).amplitudes)


def test_digit_oracle_involution():
    rng = np.random.default_rng(5)
    q = _random_quantized(rng, 4, 3)
    o = digit_oracle(q)
    amps = rng.normal(size=4 * 8 * 3)
    amps /= np.linalg.norm(amps)
    s = StateVector(amps, (4, 8, 3))
    back = apply_digit_oracle(apply_digit_oracle(s, o), o)
    assert np.allclose(back.amplitudes, s.amplitudes, atol=1e-12)
    assert o.query_count == 2


def test_digit_oracle_on_uniform_gradient_product():
    # (1/sqrt N) sum_i |i>|0>|g>_G -> (1/sqrt N) sum_i |i>|A_i>|g>_G
    q = quantize(AmplitudeVector([0.8, 0.6]), 3)
    o = digit_oracle(q)
    index = np.full(2, 1 / math.sqrt(2))
    data = np.zeros(8)
    data[0] = 1.0
    s = product_state([index, data, gradient_state(3)])
    out = apply_digit_oracle(s, o)
    expected = np.zeros((2, 8, 3), dtype=complex)
    for i, word in enumerate((6, 4)):
        expected[i, word, :] = gradient_state(3).amplitudes / math.sqrt(2)
    assert np.allclose(out.amplitudes, expected.ravel(), atol=1e-12)


def test_comparator_basics():
    assert comparator(5, 5, 3) == 1
    assert comparator(0, 7, 3) == 0
    assert comparator(7, 0, 3) == 1
    with pytest.raises(ValueError):
        comparator(8, 0, 3)


def test_comparator_exhaustive_g4():
    for a, b in itertools.product(range(16), repeat=2):
        assert comparator(a, b, 4) == int(a >= b), (a, b)


def test_comparator_cost():
    assert comparator_cost(4) == (8, 5)
    assert comparator_cost(8) == (16, 9)


def test_permutation_network_counts():
    full = build_permutation_network(2, optimize=False)
    opt = build_permutation_network(2)
    assert full.count("FREDKIN") == 2 * 2 * 2 ** 1  # both halves of the butterfly
    assert opt.count("FREDKIN") == 2 * (2 ** 2 - 1)
    assert opt.count("FREDKIN") < full.count("FREDKIN")
    assert opt.count("Z") == 1
    with pytest.raises(ValueError):
        build_permutation_network(0)


@pytest.mark.parametrize("optimize", [False, True])
def test_permutation_network_exhaustive_q2(optimize):
    """On every data x address basis state the network applies Z to the
    addressed data qubit and restores all positions."""
    circ = build_permutation_network(2, optimize=optimize)
    n = len(circ.wires)  # d0..d3, a0, a1
    for idx in range(2 ** n):
        bits = [(idx >> (n - 1 - k)) & 1 for k in range(n)]
        data, addr = bits[:4], bits[4:]
        amps = np.zeros(2 ** n, dtype=complex)
        amps[idx] = 1.0
        out = simulate_circuit(circ, StateVector(amps, (2,) * n))
        x = addr[0] + 2 * addr[1]
        expected = np.zeros(2 ** n, dtype=complex)
        expected[idx] = -1.0 if data[x] else 1.0
        assert np.allclose(out.amplitudes, expected, atol=1e-12), (data, addr)


def test_permutation_network_identity_on_zero_data():
    circ = build_permutation_network(2)
    n = len(circ.wires)
    for a0, a1 in itertools.product((0, 1), repeat=2):
        labels = (0, 0, 0, 0, a0, a1)
        s = basis_state((2,) * n, labels)
        out = simulate_circuit(circ, s)
        assert np.allclose(out.amplitudes, s.amplitudes, atol=1e-12)


def test_emulated_phase_oracle_matches_basis_states():
    rng = np.random.default_rng(6)
    q = _random_quantized(rng, 4, 4)
    emu = phase_oracle_from_digit(digit_oracle(q))
    ref = phase_oracle(q)
    for i in range(4):
        for j in range(4):
            s = basis_state([4, 4], (i, j))
            a = emu.apply(s)
            b = apply_phase_oracle(s, ref)
            assert np.allclose(a.amplitudes, b.amplitudes, atol=1e-10), (i, j)


def test_emulated_phase_oracle_query_accounting():
    q = QuantizedAmplitudes(bits=np.array([[1, 0], [0, 1]]), g=2)
    emu = phase_oracle_from_digit(digit_oracle(q))
    s = StateVector(np.full(4, 0.5), (2, 2))
    emu.apply(s)
    assert emu.round_queries == 1
    assert emu.digit.query_count == 2  # compute + uncompute
    emu.apply(s)
    assert emu.digit.query_count == 4


def test_emulated_phase_oracle_g2_toy():
    q = QuantizedAmplitudes(bits=np.array([[1, 0], [0, 0]]), g=2)
    emu = phase_oracle_from_digit(digit_oracle(q))
    s = StateVector(np.array([1.0, 0.0, 1.0, 0.0]) / math.sqrt(2), (2, 2))
    out = emu.apply(s)
    expected = np.array([-1.0, 0.0, 1.0, 0.0]) / math.sqrt(2)
    assert np.allclose(out.amplitudes, expected, atol=1e-12)


@pytest.mark.parametrize("n,g", [(2, 2), (4, 3), (8, 4)])
def test_emulated_phase_oracle_random_states(n, g):
    rng = np.random.default_rng(100 + n + g)
    q = _random_quantized(rng, n, g)
    emu = phase_oracle_from_digit(digit_oracle(q))
    ref = phase_oracle(q)
    for _ in range(5):
        amps = rng.normal(size=n * g) + 1j * rng.normal(size=n * g)
        amps /= np.linalg.norm(amps)
        s = StateVector(amps, (n, g))
        assert np.allclose(emu.apply(s).amplitudes,
                           apply_phase_oracle(s, ref).amplitudes, atol=1e-10)


def test_emulated_oracle_requires_digit_kind():
    q = QuantizedAmplitudes(bits=np.array([[1]]), g=1)
    with pytest.raises(ValueError):
        EmulatedPhaseOracle(digit=phase_oracle(q))


def test_oracle_kind_validation():
    q = QuantizedAmplitudes(bits=np.array([[1]]), g=1)
    with pytest.raises(ValueError):
        from gradprep.oracles import OracleModel

        OracleModel(kind="other", bits=q)
