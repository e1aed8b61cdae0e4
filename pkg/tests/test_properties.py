import random

from hypothesis import given, settings
from hypothesis import strategies as st

from monores.complexes import betti_oracle, is_exact, oracle_totals
from monores.io import load_fixture
from monores.monomial import (contains, deform, divides, is_generic, lcm_of, minimalize,
                              validate_deformation)
from monores.random_ideals import random_generic_ideal, random_nongeneric_ideal
from monores.resolution import check_dg_axioms, minimal_resolution, resolve_by_deformation
from monores.scarf import facet_labeling, is_labeling, axis_vertices, scarf_complex

exps = st.lists(st.lists(st.integers(0, 4), min_size=3, max_size=3), min_size=1, max_size=7)
seeds = st.integers(0, 2 ** 32 - 1)


@given(exps)
def test_minimalize_idempotent(gens):
    if not any(any(g) for g in gens):
        return
    M = minimalize(gens)
    assert minimalize(M.generators) == M
    for a in M.generators:
        assert contains(M, a)
        assert not any(a != b and divides(a, b) for b in M.generators)
    assert not contains(M, (0, 0, 0)) or (0, 0, 0) in M.generators


@given(exps, st.data())
def test_lcm_monotone(gens, data):
    M = minimalize(gens)
    idx = list(range(M.r))
    J = data.draw(st.sets(st.sampled_from(idx), min_size=1))
    I = data.draw(st.sets(st.sampled_from(sorted(J)), min_size=1))
    assert divides(lcm_of(M, I), lcm_of(M, J))
    assert lcm_of(M, sorted(J)) == lcm_of(M, sorted(J, reverse=True))
    assert lcm_of(M, list(J) + list(J)) == lcm_of(M, J)


@given(exps)
def test_deform_always_valid(gens):
    if not any(any(g) for g in gens):
        return
    M = minimalize(gens)
    dm = deform(M)
    assert is_generic(dm.deformed)
    assert validate_deformation(M, dm.deformed, dm.correspondence)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_oracle_permutation_invariant(seed):
    rng = random.Random(seed)
    M = random_nongeneric_ideal(rng, max_n=3, max_r=6)
    perm = list(range(M.n))
    rng.shuffle(perm)
    P = minimalize([tuple(g[p] for p in perm) for g in M.generators])
    assert oracle_totals(betti_oracle(M)) == oracle_totals(betti_oracle(P))


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_oracle_first_step_bounded(seed):
    M = random_nongeneric_ideal(random.Random(seed), max_n=3, max_r=6)
    for b, ranks in betti_oracle(M).items():
        assert ranks.get(1, 0) <= sum(divides(g, b) for g in M.generators)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_generic_resolution_exact(seed):
    M = random_generic_ideal(random.Random(seed), max_n=3, max_r=6)
    res = minimal_resolution(M)
    assert res.complex.check_d_squared() and is_exact(res.labeled)
    labels = [res.labeled.label(f) for f in scarf_complex(M).faces]
    assert len(labels) == len(set(labels))


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_deformation_resolution_exact(seed):
    M = random_nongeneric_ideal(random.Random(seed), max_n=3, max_r=6)
    res = resolve_by_deformation(M)
    assert res.complex.check_d_squared() and res.complex.check_multidegrees()
    assert is_exact(res.labeled) and res.length <= M.n


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_dg_skew_assoc_and_partial_leibniz(seed):
    M = random_generic_ideal(random.Random(seed), max_n=3, max_r=5)
    res = minimal_resolution(M)
    rep = check_dg_axioms(res)
    assert not rep.skew_failures and not rep.assoc_failures
    cx = res.labeled.complex
    # Leibniz can only break for disjoint I, J whose union is not a face
    for I, J in rep.leibniz_failures:
        assert not set(I) & set(J)
        assert tuple(sorted(I + J)) not in cx


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_pure_power_swap_grows_scarf_complex(seed):
    # swap a generator m_1 that is strictly largest in x_1 for a pure power of x_1
    rng = random.Random(seed)
    M = random_generic_ideal(rng, max_n=3, max_r=6)
    i = max(range(M.r), key=lambda k: M.generators[k][0])
    top = M.generators[i][0]
    if top == 0 or sum(g[0] == top for g in M.generators) > 1:
        return
    pure = (top,) + (0,) * (M.n - 1)
    new = [pure if k == i else g for k, g in enumerate(M.generators)]
    P = minimalize(new, M.var_names)
    if P.r != M.r or not is_generic(P):
        return
    idx = {k: P.index(g) for k, g in enumerate(new)}
    before = {tuple(sorted(idx[v] for v in f)) for f in scarf_complex(M).complex.faces}
    assert before <= scarf_complex(P).complex.faces


def test_facet_labelings_of_fixtures_are_valid():
    for name in ("example_4_7", "example_7_5_mprime", "ideal_6_1"):
        M = load_fixture(name)
        assert is_labeling(facet_labeling(M), axis_vertices(M))
