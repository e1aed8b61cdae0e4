import itertools

import pytest

from monores.decomposition import (IrreducibleComponent, depth, dimension,
                                   irreducible_decomposition, irredundancy_witness,
                                   is_cohen_macaulay, membership_counterexample,
                                   redundant_components, witness_ok)
from monores.errors import NotGenericError
from monores.io import load_fixture
from monores.monomial import minimalize

X, Y, Z = 0, 1, 2
EX82 = {((X, 1),), ((Y, 1),), ((Z, 1),), ((X, 3), (Y, 2)), ((Y, 3), (Z, 2)),
        ((X, 2), (Z, 3)), ((X, 3), (Y, 3), (Z, 3))}


def test_seven_components():
    dec = irreducible_decomposition(load_fixture("example_8_2"))
    assert dec.D == 4
    assert {c.entries for c in dec.components} == EX82
    assert dec.irredundant
    assert "⟨x^3, y^3, z^3⟩" in dec.format()
    assert {"x": 3, "y": 2} in dec.to_json()


def test_irreducible_ideal():
    dec = irreducible_decomposition(minimalize([(1, 0), (0, 1)]))
    assert [c.entries for c in dec.components] == [((0, 1), (1, 1))]


def test_triangle_plus_edge_box_membership():
    M = load_fixture("example_1_4")
    dec = irreducible_decomposition(M)
    box = list(itertools.product(range(5), repeat=3))
    assert membership_counterexample(dec, box) is None
    assert redundant_components(dec, box) == []
    assert all(witness_ok(dec, k) for k in range(len(dec)))


def test_witness_lies_outside_its_component():
    dec = irreducible_decomposition(load_fixture("example_8_2"))
    for k, comp in enumerate(dec.components):
        assert irredundancy_witness(dec, k) not in comp


def test_decomposition_independent_of_D():
    for name in ("example_1_4", "example_8_2", "example_4_2"):
        M = load_fixture(name)
        a = irreducible_decomposition(M)
        b = irreducible_decomposition(M, a.D + 3)
        assert a.components == b.components


def test_nongeneric_needs_flag():
    B = load_fixture("example_3_5")
    with pytest.raises(NotGenericError):
        irreducible_decomposition(B)
    dec = irreducible_decomposition(B, via_deformation=True)
    assert not dec.irredundant
    assert membership_counterexample(dec) is None


def test_component_membership():
    c = IrreducibleComponent(((0, 3), (1, 2)))
    assert (3, 0) in c and (0, 2) in c and (2, 1) not in c


def test_dimension_examples():
    assert dimension(load_fixture("example_8_2")) == 2
    assert dimension(load_fixture("example_4_7")) == 0
    assert dimension(minimalize([(1, 0, 0), (0, 1, 0)])) == 1


def test_depth_examples():
    assert depth(load_fixture("example_8_2")) == 0
    assert depth(load_fixture("ideal_6_1")) == 0
    assert depth(minimalize([(1, 0), (0, 1)])) == 0
    assert depth(minimalize([(1, 0, 0), (0, 1, 0)])) == 1


def test_cohen_macaulay_examples():
    assert not is_cohen_macaulay(load_fixture("example_8_2"))
    assert is_cohen_macaulay(minimalize([(1, 0), (0, 1)]))
    assert is_cohen_macaulay(load_fixture("example_4_7"))
    assert is_cohen_macaulay(load_fixture("ideal_6_1"))


def test_dim_depth_need_generic():
    with pytest.raises(NotGenericError):
        depth(load_fixture("example_3_5"))
