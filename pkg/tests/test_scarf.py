import pytest

from monores.complexes import SimplicialComplex
from monores.errors import MonomialError, NotGenericError
from monores.io import load_fixture
from monores.monomial import artinianize, minimalize
from monores.scarf import (axis_vertices, enumerate_labelings, facet_labeling, is_labeling,
                           scarf_brute_force, scarf_complex)


def test_triangle_plus_edge_faces(ex14):
    sc = scarf_complex(ex14.ideal)
    got = sorted(ex14.written(f) for f in sc.faces)
    assert got == [(1,), (1, 2), (1, 2, 3), (1, 3), (2,), (2, 3), (3,), (3, 4), (4,)]
    labels = {ex14.written(f): sc.label(f) for f in sc.faces if len(f) > 1}
    assert labels == {(1, 2): (3, 0, 3), (1, 3): (2, 1, 3), (2, 3): (3, 1, 2),
                      (3, 4): (1, 2, 1), (1, 2, 3): (3, 1, 3)}
    assert sc.generic and sc.downward_closed
    assert not sc.complex.is_pure()


def test_octahedron_facets(ex47):
    facets = sorted(ex47.written(f) for f in scarf_complex(ex47.ideal).facets())
    assert facets == [(1, 2, 6), (1, 3, 5), (1, 5, 6), (2, 3, 4), (2, 4, 6), (3, 4, 5), (4, 5, 6)]


def test_single_generator():
    sc = scarf_complex(minimalize([(2, 3)]))
    assert sc.faces == [(0,)]


def test_two_triangles_and_an_edge():
    M = load_fixture("example_4_2")
    sc = scarf_complex(M)
    assert sorted(len(f) for f in sc.facets()) == [2, 3, 3]
    assert sc.complex.faces == scarf_brute_force(M).complex.faces
    xyz = M.index((1, 1, 1))
    assert all(xyz in f for f in sc.facets())


def test_brute_force_agrees_triangle_plus_edge(ex14):
    assert scarf_complex(ex14.ideal).complex == scarf_brute_force(ex14.ideal).complex


def test_bivariate_path():
    M = load_fixture("example_4_6")
    sc = scarf_complex(M)
    # canonical order sorts by x-exponent, which for a staircase is the path order
    assert sc.facets() == [(i, i + 1) for i in range(M.r - 1)]


def test_nongeneric_scarf_still_defined():
    B = load_fixture("example_3_5")
    sc = scarf_complex(B)
    assert not sc.generic
    assert sc.downward_closed
    assert sc.complex.faces == scarf_brute_force(B).complex.faces


def test_facet_labeling_octahedron(ex47):
    lab = facet_labeling(ex47.ideal)
    f = ex47.face(1, 2, 6)
    got = {ex47.written((v,))[0]: s for v, s in zip(f, lab[f])}
    assert got == {1: 0, 2: 1, 6: 2}
    assert is_labeling(lab, axis_vertices(ex47.ideal))


def test_facet_labeling_axiom_a():
    M = load_fixture("ideal_6_1")
    axes = axis_vertices(M)
    for f, vals in facet_labeling(M).items():
        for v, s in zip(f, vals):
            if v in axes:
                assert axes[v] == s


def test_facet_labeling_preconditions():
    with pytest.raises(MonomialError, match="artinian"):
        facet_labeling(load_fixture("example_8_2"))
    with pytest.raises(NotGenericError):
        facet_labeling(artinianize(load_fixture("example_3_5")))


def test_single_facet_has_one_labeling():
    assert enumerate_labelings([(0, 1, 2)], 3) == [{(0, 1, 2): (0, 1, 2)}]


def test_thirteen_facet_ball_has_no_labeling():
    tri = load_fixture("theorem_7_2")
    assert len(tri) == 13
    assert enumerate_labelings(tri, 4) == []


def test_octahedron_labelings():
    labs = enumerate_labelings(load_fixture("octahedron_minus_facet"), 3)
    assert len(labs) == 2
    assert labs == sorted(labs, key=lambda d: sorted(d.items()))


def test_enumerate_rejects_non_pure():
    tri = SimplicialComplex.from_facets([(0, 1, 2), (2, 3)])
    with pytest.raises(MonomialError, match="not pure"):
        enumerate_labelings(tri, 3)


def test_own_labeling_is_found(ex47):
    M = ex47.ideal
    sc = scarf_complex(M)
    assert facet_labeling(M) in enumerate_labelings(sc.complex, 3, axis_vertices(M))
