import pytest

from monores.errors import MonomialError
from monores.io import load_fixture
from monores.monomial import (DeformationMap, MonomialIdeal, artinianize, contains, deform,
                              divides, is_generic, lcm_of, minimalize, minimalize_report,
                              standard_monomials, unit, validate_deformation)

EX14 = [(2, 0, 3), (3, 0, 2), (1, 1, 1), (0, 2, 0)]
BACKELIN = [(2, 0, 0, 0), (1, 2, 1, 0), (0, 2, 2, 0), (0, 1, 2, 1), (0, 0, 0, 2)]
BACKELIN_EPS = [(2, 0, 0, 0), (1, 2, 1, 0), (0, 3, 3, 0), (0, 1, 2, 1), (0, 0, 0, 2)]


def test_lcm_of_examples(ex14):
    M = ex14.ideal
    assert lcm_of(M, ex14.face(1, 3)) == (2, 1, 3)
    assert lcm_of(M, ex14.face(1, 2, 3)) == (3, 1, 3)
    for i, g in enumerate(M.generators):
        assert lcm_of(M, [i]) == g


def test_lcm_of_empty_face():
    M = minimalize(EX14)
    with pytest.raises(MonomialError, match="empty face"):
        lcm_of(M, [])
    assert unit(3) == (0, 0, 0)


def test_minimalize_examples():
    assert minimalize([(1,), (2,)]).generators == ((1,),)
    assert set(minimalize(EX14).generators) == set(EX14)
    M, dropped = minimalize_report(EX14 + [(3, 2, 3)])
    assert set(M.generators) == set(EX14)
    assert dropped == [(3, 2, 3)]


def test_minimalize_dedupes_and_sorts():
    M = minimalize([(0, 2), (2, 0), (0, 2)])
    assert M.generators == ((0, 2), (2, 0))


def test_ideal_constructor_rejects_non_minimal():
    with pytest.raises(MonomialError):
        MonomialIdeal(("x", "y"), ((1, 0), (2, 0)))
    with pytest.raises(MonomialError):
        MonomialIdeal(("x", "y"), ((1, 0), (0, 1)))  # not lex sorted


def test_divides():
    assert divides((1, 1, 1), (3, 1, 3))
    assert divides((2, 0, 3), (2, 0, 3))
    assert not divides((0, 2, 0), (1, 1, 1))
    with pytest.raises(MonomialError):
        divides((1, 1), (1, 1, 1))


def test_is_generic():
    assert is_generic(load_fixture("example_4_2"))
    assert not is_generic(minimalize(BACKELIN))
    assert is_generic(minimalize([(1, 0), (0, 1)]))


def test_contains():
    M = minimalize(EX14)
    assert contains(M, (3, 2, 3))
    assert not contains(M, (0, 0, 0))
    xs = minimalize([(1, 0)])
    assert not any(contains(xs, (0, k)) for k in range(10))


def test_standard_monomials():
    assert standard_monomials(minimalize([(1,)]), (3,)) == [(0,)]
    assert standard_monomials(minimalize([(2, 0), (0, 2)]), (2, 2)) == [
        (0, 0), (0, 1), (1, 0), (1, 1)]


def test_standard_monomials_count_matches_scan():
    M = minimalize(EX14)
    box = [(a, b, c) for a in range(5) for b in range(5) for c in range(5)]
    inside = sum(contains(M, m) for m in box)
    assert len(standard_monomials(M, (4, 4, 4))) == 125 - inside


def test_artinianize_adds_pure_powers():
    M = load_fixture("example_8_2")
    A = artinianize(M, 4)
    want = {(4, 0, 0), (0, 4, 0), (0, 0, 4), (1, 2, 3), (3, 1, 2), (2, 3, 1)}
    assert set(A.generators) == want
    assert A.is_artinian


def test_artinianize_skips_existing_pure_powers():
    M = minimalize(EX14)
    A = artinianize(M)
    assert set(A.generators) - set(M.generators) == {(4, 0, 0), (0, 0, 4)}
    B = load_fixture("example_4_7")
    assert artinianize(B) == B


def test_artinianize_bad_D():
    with pytest.raises(MonomialError, match="must exceed"):
        artinianize(load_fixture("example_8_2"), 3)


def test_deform_generic_is_identity():
    M = load_fixture("example_4_2")
    dm = deform(M)
    assert dm.is_identity() and dm.correspondence == tuple(range(M.r))


def test_deform_backelin():
    M = minimalize(BACKELIN)
    dm = deform(M)
    assert is_generic(dm.deformed)
    assert dm.deformed.r == M.r
    assert validate_deformation(M, dm.deformed, dm.correspondence)


def test_backelin_reference_deformation_validates():
    dm = DeformationMap.from_lists(BACKELIN, BACKELIN_EPS)
    assert validate_deformation(dm.original, dm.deformed, dm.correspondence)
    assert load_fixture("example_5_4_deformation") == dm


def test_backelin_is_not_its_own_deformation():
    M = minimalize(BACKELIN)
    assert not validate_deformation(M, M, tuple(range(M.r)))


def test_squarefree_power_deformation():
    # m_1, m_2^2, ..., m_r^r deforms a squarefree ideal
    gens = [(1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1), (1, 0, 0, 1), (1, 0, 1, 0)]
    powered = [tuple((k + 1) * e for e in g) for k, g in enumerate(gens)]
    dm = DeformationMap.from_lists(gens, powered)
    assert validate_deformation(dm.original, dm.deformed, dm.correspondence)


def test_validate_rejects_order_reversal():
    # the x-exponents 3 > 1 come out as 1 < 3
    bad = DeformationMap.from_lists([(3, 1), (1, 3)], [(1, 2), (3, 1)])
    assert is_generic(bad.deformed)
    assert not validate_deformation(bad.original, bad.deformed, bad.correspondence)
