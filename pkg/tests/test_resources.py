"""Tests for per-round gate and ancilla tallies of the register variants."""

import pytest

from gradprep.errors import OutOfRange
from gradprep.gradient import build_gradient_circuit
from gradprep.oracles import build_permutation_network
from gradprep.resources import (
    VARIANTS,
    ResourceTally,
    mcx_t_cost,
    tally_from_circuit,
    tally_variant,
)
from gradprep.statesim import Circuit

G_VALUES = (2, 4, 8, 16, 32, 64)


def test_variant_tuple():
    assert VARIANTS == ("sanders_v1", "sanders_v2", "ours_v1", "ours_v2")


def test_sanders_v1_cells():
    for g, toffoli, ancillas in zip(G_VALUES, (4, 8, 16, 32, 64, 128), (5, 9, 17, 33, 65, 129)):
        tally = tally_variant("sanders_v1", g)
        assert tally.toffoli == toffoli
        assert tally.ancillas == ancillas
        assert tally.sqrt_swap == 0
        assert tally.t_gates == 0


def test_sanders_v2_cells():
    for g, toffoli, ancillas in zip(G_VALUES, (6, 14, 30, 62, 126, 254), (4, 6, 10, 18, 34, 66)):
        tally = tally_variant("sanders_v2", g)
        assert tally.toffoli == toffoli
        assert tally.ancillas == ancillas


def test_ours_v1_cells():
    for g, ancillas in zip(G_VALUES, (1, 2, 3, 4, 5, 6)):
        tally = tally_variant("ours_v1", g)
        assert tally.toffoli == 0
        assert tally.sqrt_swap == g
        assert tally.ancillas == ancillas


def test_ours_v2_cells():
    toffolis = (2, 6, 14, 30, 62, 126)
    bounds = (4, 16, 48, 128, 320, 768)
    ancillas = (3, 6, 11, 20, 37, 70)
    for g, toffoli, bound, anc in zip(G_VALUES, toffolis, bounds, ancillas):
        tally = tally_variant("ours_v2", g)
        assert tally.toffoli == toffoli
        assert tally.toffoli_bound == bound
        assert tally.toffoli <= tally.toffoli_bound
        assert tally.sqrt_swap == g
        assert tally.ancillas == anc
        assert tally.cnot == 2 * toffoli


def test_variant_validation():
    with pytest.raises(OutOfRange):
        tally_variant("ours_v1", 3)
    with pytest.raises(OutOfRange):
        tally_variant("ours_v1", 1)
    with pytest.raises(OutOfRange):
        tally_variant("sanders_v1", 0)
    with pytest.raises(OutOfRange):
        tally_variant("ours_v3", 4)


def test_tally_empty_circuit():
    tally = tally_from_circuit(Circuit(()))
    assert (tally.toffoli, tally.sqrt_swap, tally.t_gates, tally.cnot, tally.ancillas) == (
        0,
        0,
        0,
        0,
        0,
    )


def test_tally_permutation_network():
    optimized = tally_from_circuit(build_permutation_network(2))
    assert optimized.toffoli == 6
    assert optimized.cnot == 12
    assert optimized.ancillas == 6
    full = tally_from_circuit(build_permutation_network(2, optimize=False))
    assert full.toffoli == 8
    assert optimized.toffoli < full.toffoli


def test_tally_gradient_circuit():
    tally = tally_from_circuit(build_gradient_circuit(4), variant="gradient")
    assert tally.variant == "gradient"
    assert tally.sqrt_swap == 4
    assert tally.toffoli == 7  # Fredkins
    assert tally.t_gates == 20  # 3 per root-swap plus the ladder T/Tdg pairs
    assert tally.cnot == 23
    assert tally.ancillas == 11


def test_network_toffoli_grows_as_stated():
    # optimized funnel: 2 (2^q - 1) Toffolis
    for q, expected in ((1, 2), (2, 6), (3, 14)):
        assert tally_from_circuit(build_permutation_network(q)).toffoli == expected


def test_mcx_t_cost():
    assert mcx_t_cost(5) == 32
    assert mcx_t_cost(7) == 96
    with pytest.raises(OutOfRange):
        mcx_t_cost(4)
    with pytest.raises(OutOfRange):
        mcx_t_cost(3)


def test_tally_rejects_negative_counts():
    with pytest.raises(OutOfRange):
        ResourceTally(variant="x", toffoli=-1, sqrt_swap=0, t_gates=0, ancillas=0)
