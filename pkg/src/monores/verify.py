"""Self-check suite over the bundled fixtures plus seeded random sweeps.

Each check returns ``(passed, detail)``; ``detail`` names the first
counterexample on failure.  ``run_all`` drives the CLI ``verify`` verb.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .complexes import (betti_oracle, exactness_failures, is_exact, oracle_totals,
                        reduced_homology, taylor_complex)
from .decomposition import (depth, dimension, irreducible_decomposition, is_cohen_macaulay,
                            membership_counterexample, redundant_components, witness_ok)
from .io import load_fixture
from .monomial import MonomialIdeal, artinianize
from .random_ideals import random_generic_ideal, random_monomial, random_nongeneric_ideal
from .resolution import (betti_numbers, check_dg_axioms, check_upper_bound, default_box,
                         hilbert_matches_standard_monomials, hilbert_numerator,
                         minimal_resolution, resolve_by_deformation)
from .scarf import (axis_vertices, enumerate_labelings, facet_labeling, is_labeling,
                    restricted_scarf_matches, scarf_brute_force, scarf_complex)

FIELDS = (0, 2, 3, 5)


def _written_faces(ideal: MonomialIdeal, listed, faces):
    """Translate canonical faces to 1-based positions in the listed generator order."""
    pos = {ideal.index(g): k + 1 for k, g in enumerate(listed)}
    return sorted(tuple(sorted(pos[v] for v in f)) for f in faces)


def _listed(name):
    import json
    from .io import fixture_path
    return [tuple(g) for g in json.loads(fixture_path(name).read_text())["generators"]]


def check_triangle_edge():
    M = load_fixture("example_1_4")
    listed = _listed("example_1_4")
    sc = scarf_complex(M)
    want = [(1,), (2,), (3,), (4,), (1, 2), (1, 3), (2, 3), (3, 4), (1, 2, 3)]
    got = _written_faces(M, listed, sc.faces)
    if sorted(got) != sorted(want):
        return False, f"faces {got}"
    res = minimal_resolution(M)
    if betti_numbers(res) != [1, 4, 4, 1] or not is_exact(res.labeled):
        return False, f"betti {betti_numbers(res)}"
    num = hilbert_numerator(M).as_dict()
    P = {(0, 0, 0): 1, (2, 0, 3): -1, (3, 0, 2): -1, (1, 1, 1): -1, (0, 2, 0): -1,
         (3, 0, 3): 1, (2, 1, 3): 1, (3, 1, 2): 1, (1, 2, 1): 1, (3, 1, 3): -1}
    if num != P:
        return False, f"numerator {num}"
    return True, "faces, Betti 1,4,4,1, numerator"


def check_octahedron():
    M = load_fixture("example_4_7")
    facets = _written_faces(M, _listed("example_4_7"), scarf_complex(M).facets())
    want = [(1, 2, 6), (1, 3, 5), (1, 5, 6), (2, 3, 4), (2, 4, 6), (3, 4, 5), (4, 5, 6)]
    if facets != want:
        return False, f"facets {facets}"
    res = minimal_resolution(M)
    ok = is_exact(res.labeled) and res.complex.is_minimal()
    return ok, "7 triangles, exact, minimal"


def check_backelin(dg: bool = True):
    B = load_fixture("example_3_5")
    if taylor_complex(B).ranks != [1, 5, 10, 10, 5, 1]:
        return False, "Taylor ranks"
    if oracle_totals(betti_oracle(B)) != [1, 5, 7, 4, 1]:
        return False, "oracle totals"
    res = resolve_by_deformation(B, load_fixture("example_5_4_deformation"))
    if betti_numbers(res) != [1, 5, 8, 5, 1] or not is_exact(res.labeled):
        return False, f"deformation ranks {betti_numbers(res)}"
    if dg:
        rep = check_dg_axioms(res)
        if not rep.ok:
            bad = (rep.skew_failures or rep.assoc_failures or rep.leibniz_failures)[0]
            return False, (f"DG axioms: {len(rep.leibniz_failures)} Leibniz, "
                           f"{len(rep.assoc_failures)} assoc, {len(rep.skew_failures)} skew failures; "
                           f"first {bad}")
    return True, "Taylor, oracle, deformation, DG"


def check_neighborly():
    A = load_fixture("ideal_6_1")
    res = minimal_resolution(A)
    if betti_numbers(res) != [1, 12, 66, 108, 53]:
        return False, f"betti {betti_numbers(res)}"
    edges = scarf_complex(A).complex.faces_of_dim(1)
    if len(edges) != 66:
        return False, "not neighborly"
    rep = check_upper_bound(A)
    return rep.ok and rep.tight, "Betti 1,12,66,108,53; bounds tight"


def check_no_labeling():
    labs = enumerate_labelings(load_fixture("theorem_7_2"), 4)
    return not labs, f"{len(labs)} labelings"


def check_two_labelings():
    tri = load_fixture("octahedron_minus_facet")
    all_labs = enumerate_labelings(tri, 3)
    translated = []
    for name in ("example_7_5_m", "example_7_5_mprime"):
        M = load_fixture(name)
        lab = facet_labeling(M)
        if not is_labeling(lab, axis_vertices(M)):
            return False, f"{name} violates the axioms"
        listed = _listed(name)
        pos = {M.index(g): k for k, g in enumerate(listed)}
        out = {}
        for f, vals in lab.items():
            pairs = sorted((pos[v], s) for v, s in zip(f, vals))
            out[tuple(p for p, _ in pairs)] = tuple(s for _, s in pairs)
        if out not in all_labs:
            return False, f"{name} labeling missing from search"
        translated.append(out)
    diff = [f for f in translated[0] if translated[0][f] != translated[1][f]]
    return diff == [(3, 4, 5)], f"differ on {diff}, {len(all_labs)} labelings"


def check_decomposition():
    E = load_fixture("example_8_2")
    dec = irreducible_decomposition(E)
    want = {((0, 1),), ((1, 1),), ((2, 1),), ((0, 3), (1, 2)), ((1, 3), (2, 2)),
            ((0, 2), (2, 3)), ((0, 3), (1, 3), (2, 3))}
    if {c.entries for c in dec.components} != want or len(dec) != 7:
        return False, dec.format()
    import itertools
    box = list(itertools.product(range(5), repeat=3))
    bad = membership_counterexample(dec, box)
    if bad is not None:
        return False, f"membership differs at {bad}"
    if redundant_components(dec, box) or not all(witness_ok(dec, k) for k in range(len(dec))):
        return False, "redundant component"
    return True, "7 components, box (0..4)^3"


def check_dim_depth():
    for name in ("example_1_4", "example_4_2", "example_4_6", "example_4_7", "example_7_5_mprime",
                 "example_8_2", "ideal_6_1"):
        M = load_fixture(name)
        dec = irreducible_decomposition(M)
        pure = len({c.size for c in dec.components}) == 1
        if is_cohen_macaulay(M) != pure or (dimension(M) == depth(M)) != pure:
            return False, name
        if depth(M) != M.n - (len(betti_numbers(minimal_resolution(M))) - 1):
            return False, f"{name}: depth disagrees with projective dimension"
    E = load_fixture("example_8_2")
    ok = (dimension(E), depth(E), is_cohen_macaulay(E)) == (2, 0, False)
    return ok, "purity on fixtures; 8.2 gives dim 2, depth 0, not CM"


def sweep_generic(count: int = 200, seed: int = 0, restrictions: int = 10):
    rng = random.Random(seed)
    for k in range(count):
        M = random_generic_ideal(rng)
        sc = scarf_complex(M)
        if sc.complex.faces != scarf_brute_force(M).complex.faces:
            return False, f"#{k} {M}: brute force differs"
        res = minimal_resolution(M)
        if not res.complex.is_minimal() or not is_exact(res.labeled):
            return False, f"#{k} {M}: not a minimal resolution"
        tables = {p: betti_oracle(M, p) for p in FIELDS}
        if any(t != tables[0] for t in tables.values()):
            return False, f"#{k} {M}: oracle depends on the field"
        if oracle_totals(tables[0]) != betti_numbers(res):
            return False, f"#{k} {M}: Betti differs from oracle"
        if any(v > 1 for ranks in tables[0].values() for v in ranks.values()):
            return False, f"#{k} {M}: multigraded Betti above 1"
        for p in FIELDS[1:]:
            if next(exactness_failures(res.labeled, p), None) is not None:
                return False, f"#{k} {M}: not exact over GF({p})"
        if not hilbert_matches_standard_monomials(M, default_box(M), hilbert_numerator(M)):
            return False, f"#{k} {M}: Hilbert series mismatch"
        A = artinianize(M)
        asc = scarf_complex(A)
        if not all(len(f) == A.n for f in asc.facets()):
            return False, f"#{k} {A}: artinian Scarf complex not pure"
        if any(not reduced_homology(asc.complex, p).acyclic for p in FIELDS):
            return False, f"#{k} {A}: Scarf complex not acyclic"
        bound = [max(g[s] for g in M.generators) + 1 for s in range(M.n)]
        for _ in range(restrictions):
            m = random_monomial(rng, bound)
            if not restricted_scarf_matches(M, m):
                return False, f"#{k} {M}: restriction identity fails at {m}"
    return True, f"{count} ideals, seed {seed}"


def sweep_nongeneric(count: int = 100, seed: int = 1):
    rng = random.Random(seed)
    for k in range(count):
        M = random_nongeneric_ideal(rng)
        res = resolve_by_deformation(M)
        if not is_exact(res.labeled):
            return False, f"#{k} {M}: deformation resolution not exact"
        if res.length > M.n:
            return False, f"#{k} {M}: length {res.length} > {M.n}"
        tot = oracle_totals(betti_oracle(M))
        ranks = betti_numbers(res)
        if len(tot) > len(ranks) or any(a > b for a, b in zip(tot, ranks)):
            return False, f"#{k} {M}: {ranks} does not dominate {tot}"
    return True, f"{count} ideals, seed {seed}"


@dataclass
class CheckResult:
    key: str
    title: str
    passed: bool
    detail: str


def run_all(seed: int = 0, generic_count: int = 200, nongeneric_count: int = 100):
    checks = [
        ("1", "triangle-plus-edge ideal end to end", check_triangle_edge),
        ("2", "octahedron-minus-facet Scarf complex", check_octahedron),
        ("3", "Backelin: Taylor, oracle, deformation, DG", check_backelin),
        ("4", "neighborly 12-generator ideal", check_neighborly),
        ("5", "13-facet triangulation has no labeling", check_no_labeling),
        ("6", "two realizable labelings", check_two_labelings),
        ("7", "seven irreducible components", check_decomposition),
        ("8", "generic property sweep", lambda: sweep_generic(generic_count, seed)),
        ("9", "non-generic deformation sweep", lambda: sweep_nongeneric(nongeneric_count, seed + 1)),
        ("10", "dimension, depth, Cohen-Macaulay", check_dim_depth),
    ]
    out = []
    for key, title, fn in checks:
        try:
            passed, detail = fn()
        except Exception as exc:  # report and keep going
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(CheckResult(key, title, bool(passed), detail))
    return out
