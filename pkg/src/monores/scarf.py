"""Scarf complexes, facet labelings and the labeling search."""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .complexes import LabeledComplex, SimplicialComplex
from .errors import CapExceeded, MonomialError, NotGenericError
from .monomial import MonomialIdeal, is_generic, lcm, quotient, unit

BRUTE_FORCE_CAP = 12


@dataclass(frozen=True)
class ScarfComplex:
    """Faces of the ideal with a unique lcm, labeled by the generators."""

    base: LabeledComplex
    generic: bool
    downward_closed: bool = True

    @property
    def complex(self) -> SimplicialComplex:
        return self.base.complex

    @property
    def ideal(self) -> MonomialIdeal:
        return self.base.ideal

    @property
    def faces(self) -> list[tuple]:
        return self.base.complex.sorted_faces()

    def facets(self) -> list[tuple]:
        return self.base.complex.facets()

    def label(self, face) -> tuple:
        return self.base.label(face)

    def f_vector(self) -> list[int]:
        return self.base.complex.f_vector()


def _wrap(ideal: MonomialIdeal, faces: Iterable[tuple]) -> ScarfComplex:
    faces = frozenset(faces)
    closed = all(f[:k] + f[k + 1:] in faces for f in faces if len(f) > 1 for k in range(len(f)))
    if not closed:
        # cannot happen for a unique-lcm family; kept as a guard
        raise MonomialError("unique-lcm faces are not downward closed")
    sc = SimplicialComplex(ideal.r, faces)
    return ScarfComplex(LabeledComplex(sc, ideal), is_generic(ideal), closed)


def _is_scarf_face(ideal: MonomialIdeal, face: tuple, label: tuple) -> bool:
    gens = ideal.generators
    n = ideal.n
    for k in range(len(face)):
        rest = face[:k] + face[k + 1:]
        sub = lcm(*(gens[i] for i in rest)) if rest else unit(n)
        if sub == label:
            return False
    members = set(face)
    for j, g in enumerate(gens):
        if j not in members and all(a <= b for a, b in zip(g, label)):
            return False
    return True


def scarf_complex(ideal: MonomialIdeal) -> ScarfComplex:
    """Scarf complex by breadth-first growth with the local face test.

    A subset is a face iff dropping any vertex shrinks its lcm and no other
    generator divides its lcm.  Faces are grown by appending larger
    indices to faces of the previous size.
    """
    gens = ideal.generators
    level = []
    for i, g in enumerate(gens):
        if _is_scarf_face(ideal, (i,), g):
            level.append(((i,), g))
    faces = [f for f, _ in level]
    while level:
        nxt = []
        known = set(f for f, _ in level)
        for f, lab in level:
            for j in range(f[-1] + 1, ideal.r):
                cand = f + (j,)
                if any(cand[:k] + cand[k + 1:] not in known for k in range(len(cand) - 1)):
                    continue
                new = lcm(lab, gens[j])
                if _is_scarf_face(ideal, cand, new):
                    nxt.append((cand, new))
        faces.extend(f for f, _ in nxt)
        level = nxt
    return _wrap(ideal, faces)


def scarf_brute_force(ideal: MonomialIdeal, cap: int = BRUTE_FORCE_CAP) -> ScarfComplex:
    """Scarf complex straight from the definition: lcm every subset, keep the unique ones."""
    if ideal.r > cap:
        raise CapExceeded(f"{ideal.r} generators exceeds the brute-force cap of {cap}")
    gens = ideal.generators
    labels = {(): unit(ideal.n)}
    for k in range(1, ideal.r + 1):
        for f in itertools.combinations(range(ideal.r), k):
            labels[f] = lcm(labels[f[:-1]], gens[f[-1]]) if k > 1 else gens[f[0]]
    counts = Counter(labels.values())
    return _wrap(ideal, [f for f, lab in labels.items() if f and counts[lab] == 1])


def restricted_scarf_matches(ideal: MonomialIdeal, m: Sequence[int]) -> bool:
    """Check that restricting the Scarf complex to ``m`` equals the Scarf complex of ``M[m]``."""
    from .complexes import restrict

    whole = scarf_complex(ideal)
    left = restrict(whole.base, m).faces
    sub, idx = ideal.subideal(m)
    if sub.is_zero:
        return not left
    right = {tuple(idx[i] for i in f) for f in scarf_complex(sub).complex.faces}
    return set(left) == right


# -- labelings ---------------------------------------------------------------

Labeling = dict  # facet (sorted tuple) -> tuple of variable indices aligned with the facet


def axiom_a_holds(labeling: Mapping, axes: Mapping[int, int]) -> bool:
    for facet, vals in labeling.items():
        for v, s in zip(facet, vals):
            if v in axes and axes[v] != s:
                return False
    return True


def _ridge_pairs(facets: Sequence[tuple]) -> list[tuple[tuple, tuple]]:
    by_ridge = defaultdict(list)
    for f in facets:
        for k in range(len(f)):
            by_ridge[f[:k] + f[k + 1:]].append(f)
    pairs = []
    for fs in by_ridge.values():
        pairs.extend(itertools.combinations(sorted(fs), 2))
    return pairs


def _agree_count(f: tuple, fv: Sequence[int], g: tuple, gv: Sequence[int]) -> int:
    gmap = dict(zip(g, gv))
    return sum(1 for v, s in zip(f, fv) if v in gmap and gmap[v] == s)


def axiom_b_holds(labeling: Mapping) -> bool:
    facets = sorted(labeling)
    if not facets:
        return True
    n = len(facets[0])
    for f, g in _ridge_pairs(facets):
        if _agree_count(f, labeling[f], g, labeling[g]) != n - 2:
            return False
    return True


def is_labeling(labeling: Mapping, axes: Mapping[int, int]) -> bool:
    for facet, vals in labeling.items():
        if sorted(vals) != list(range(len(facet))):
            return False
    return axiom_a_holds(labeling, axes) and axiom_b_holds(labeling)


def axis_vertices(ideal: MonomialIdeal) -> dict[int, int]:
    """Map from generator index to variable, for pure-power generators."""
    out = {}
    for s in range(ideal.n):
        i = ideal.pure_power_index(s)
        if i is not None:
            out[i] = s
    return out


def facet_labeling(ideal: MonomialIdeal) -> Labeling:
    """Labeling induced by the exponents of a generic artinian ideal.

    In facet I, vertex j gets the one variable whose exponent in m_j equals
    that of the facet label m_I.
    """
    if not ideal.is_artinian:
        raise MonomialError("facet labeling needs an artinian ideal")
    if not is_generic(ideal):
        raise NotGenericError("facet labeling needs a generic ideal")
    sc = scarf_complex(ideal)
    out = {}
    for facet in sc.facets():
        if len(facet) != ideal.n:
            raise MonomialError(f"facet {facet} does not have {ideal.n} vertices")
        top = sc.label(facet)
        vals = []
        for j in facet:
            q = quotient(top, ideal.generators[j])
            missing = [s for s, e in enumerate(q) if e == 0]
            if len(missing) != 1:
                raise MonomialError(f"facet {facet}, vertex {j}: missing variables {missing}")
            vals.append(missing[0])
        out[facet] = tuple(vals)
    return out


def enumerate_labelings(tri: SimplicialComplex | Iterable[Iterable[int]], n: int,
                        axes: Mapping[int, int] | None = None) -> list[Labeling]:
    """All labelings of a pure triangulation by exhaustive backtracking.

    ``axes`` maps each boundary-simplex vertex to its variable; by default
    vertex ``i`` maps to variable ``i`` for ``i < n``.  Facets are filled
    most-constrained first and every ridge is checked as soon as both of
    its facets are set.
    """
    if isinstance(tri, SimplicialComplex):
        facets = tri.facets()
    else:
        facets = sorted({tuple(sorted(f)) for f in tri})
    if any(len(f) != n for f in facets):
        raise MonomialError(f"triangulation is not pure of dimension {n - 1}")
    if axes is None:
        axes = {i: i for i in range(n)}
    neighbors = defaultdict(list)
    for f, g in _ridge_pairs(facets):
        neighbors[f].append(g)
        neighbors[g].append(f)

    options = {}
    for f in facets:
        opts = []
        for perm in itertools.permutations(range(n)):
            if all(axes.get(v, s) == s for v, s in zip(f, perm)):
                opts.append(perm)
        options[f] = opts

    assigned: dict = {}
    results = []

    def consistent(f, vals):
        return all(_agree_count(f, vals, g, assigned[g]) == n - 2
                   for g in neighbors[f] if g in assigned)

    def pick():
        best, best_opts = None, None
        for f in facets:
            if f in assigned:
                continue
            ok = [v for v in options[f] if consistent(f, v)]
            if best is None or len(ok) < len(best_opts):
                best, best_opts = f, ok
                if not ok:
                    break
        return best, best_opts

    def search():
        if len(assigned) == len(facets):
            results.append(dict(assigned))
            return
        f, opts = pick()
        for vals in opts:
            assigned[f] = vals
            search()
            del assigned[f]

    search()
    results = [dict(sorted(lab.items())) for lab in results]
    results.sort(key=lambda lab: sorted(lab.items()))
    return results
