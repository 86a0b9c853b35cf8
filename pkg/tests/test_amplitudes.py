import json
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gradprep.amplitudes import (
    AmplitudeVector,
    QuantizedAmplitudes,
    bit_weights,
    normalize,
    quantize,
    shift_exponent,
    trace_distance_bound,
)
from gradprep.errors import OutOfRange, ZeroVector


def test_amplitude_vector_validation():
    with pytest.raises(ValueError):
        AmplitudeVector(np.array([]))
    with pytest.raises(ValueError):
        AmplitudeVector(np.array([1.0, -0.1]))
    with pytest.raises(ValueError):
        AmplitudeVector(np.array([np.inf]))
    v = AmplitudeVector([0.3, 0.4])
    assert v.n_elements == 2
    assert v.norms().l1 == pytest.approx(0.7)
    assert v.norms().l2 == pytest.approx(0.5)


def test_bit_weights():
    assert np.allclose(bit_weights(3), [0.5, 0.25, 0.125])


def test_normalize():
    assert np.allclose(normalize([3, 4]).values, [0.6, 0.8])
    assert np.allclose(normalize([1, 1, 1, 1]).values, [0.5, 0.5, 0.5, 0.5])
    with pytest.raises(ZeroVector):
        normalize([0.0, 0.0])


def test_quantize_two_values():
    q = quantize(AmplitudeVector([0.8, 0.6]), 3)
    assert np.allclose(q.values, [0.75, 0.5])
    assert q.bits.tolist() == [[1, 1, 0], [1, 0, 0]]
    assert q.scale_shift == 0


def test_quantize_eight_coefficient_example():
    # binary fractions 0.100 ... 0.110 are exactly representable at g=3
    vals = np.array([0.5, 0.5, 0.5, 0.5, 0.875, 0.625, 0.75, 0.75])
    q = quantize(vals, 3)
    assert np.array_equal(q.values, vals)


def test_quantize_small_uniform_single_bit():
    q = quantize(np.full(64, 1.0 / 8), 3)
    assert all(row == [0, 0, 1] for row in q.bits.tolist())


def test_quantize_saturates_at_one():
    q = quantize(AmplitudeVector([1.0]), 4)
    assert q.values[0] == 1.0 - 2.0 ** -4
    assert q.bits.tolist() == [[1, 1, 1, 1]]


def test_quantize_rejects_values_above_one():
    with pytest.raises(OutOfRange):
        quantize(AmplitudeVector([1.2]), 3)
    with pytest.raises(OutOfRange):
        quantize(AmplitudeVector([0.5]), 0)


def test_shift_exponent():
    assert shift_exponent(0.5) == 0
    assert shift_exponent(0.9) == 0
    assert shift_exponent(0.25) == 1
    assert shift_exponent(0.3) == 1
    assert shift_exponent(1.0 / 8) == 2
    with pytest.raises(ZeroVector):
        shift_exponent(0.0)


def test_quantize_with_shift():
    # 2^2 * 1/8 = 0.5 puts the leading one in bit position 0
    q = quantize(np.full(64, 1.0 / 8), 3, shift=True)
    assert q.scale_shift == 2
    assert all(v == 0.5 for v in q.values)
    q2 = quantize(AmplitudeVector([0.3, 0.2]), 4, shift=True)
    assert q2.scale_shift == 1
    assert np.allclose(q2.values, [0.5625, 0.375])  # floor(0.6*16)/16, floor(0.4*16)/16


def test_quantized_int_values():
    q = quantize(AmplitudeVector([0.8, 0.6]), 3)
    assert q.int_values.tolist() == [6, 4]


def test_quantized_validation():
    with pytest.raises(ValueError):
        QuantizedAmplitudes(bits=np.array([[0, 2]]), g=2)
    with pytest.raises(ValueError):
        QuantizedAmplitudes(bits=np.array([[0, 1]]), g=3)
    with pytest.raises(ValueError):
        QuantizedAmplitudes(bits=np.array([[0, 1]]), g=2, scale_shift=-1)


def test_json_roundtrip():
    q = quantize(AmplitudeVector([0.8, 0.6]), 3)
    data = json.loads(q.to_json())
    back = QuantizedAmplitudes.from_json_dict(data)
    assert np.array_equal(back.bits, q.bits)
    assert back.g == q.g and back.scale_shift == q.scale_shift
    data["n"] = 7
    with pytest.raises(ValueError):
        QuantizedAmplitudes.from_json_dict(data)


@settings(max_examples=60)
@given(
    st.lists(st.floats(min_value=0.0, max_value=1.0, allow_nan=False), min_size=1, max_size=8),
    st.integers(min_value=1, max_value=10),
    st.booleans(),
)
def test_round_toward_zero_invariant(values, g, shift):
    if max(values) == 0.0:
        shift = False
    q = quantize(AmplitudeVector(values), g, shift=shift)
    scaled = np.asarray(values) * 2.0 ** q.scale_shift
    saturated = np.minimum(scaled, 1.0 - 2.0 ** -g)  # inputs exactly 1.0 clip
    assert np.all(q.values <= scaled + 1e-12)
    assert np.all(saturated - q.values < 2.0 ** -g + 1e-12)


@given(
    st.lists(st.floats(min_value=0.0, max_value=1.0, allow_nan=False), min_size=1, max_size=6),
    st.integers(min_value=1, max_value=8),
)
def test_quantize_idempotent(values, g):
    q = quantize(AmplitudeVector(values), g)
    again = quantize(AmplitudeVector(q.values), g)
    assert np.array_equal(again.bits, q.bits)


def test_inner_product_dominates_quantized_norm():
    # <alpha|A/||A||> >= ||A||_2 for unshifted quantization of a unit vector
    rng = np.random.default_rng(5)
    for _ in range(25):
        alpha = normalize(rng.uniform(0.0, 1.0, size=16))
        q = quantize(alpha, 6)
        a = q.values
        l2 = np.linalg.norm(a)
        if l2 == 0.0:
            continue
        assert float(alpha.values @ (a / l2)) >= l2 - 1e-12


def test_trace_distance_zero_for_exact():
    vals = normalize([0.5, 0.5, 0.5, 0.5])
    q = quantize(vals, 2)
    tb = trace_distance_bound(vals, q)
    assert tb.actual == pytest.approx(0.0, abs=1e-12)
    assert tb.actual <= tb.bound


def test_trace_distance_example():
    v = AmplitudeVector([0.8, 0.6])
    tb = trace_distance_bound(v, quantize(v, 3))
    assert tb.bound == pytest.approx(0.5 * math.sqrt(1.4), abs=1e-12)
    assert tb.actual <= tb.bound


def test_trace_distance_random_instances():
    rng = np.random.default_rng(11)
    for _ in range(30):
        alpha = normalize(rng.uniform(0.0, 1.0, size=64))
        tb = trace_distance_bound(alpha, quantize(alpha, 8))
        assert tb.actual <= tb.bound + 1e-12


def test_trace_distance_zero_quantized_raises():
    v = AmplitudeVector([0.1, 0.1])
    q = quantize(v, 2)  # both values floor to zero
    with pytest.raises(ZeroVector):
        trace_distance_bound(v, q)
