"""Irreducible decomposition, dimension, depth and the Cohen-Macaulay test.

Each facet of the Scarf complex of the artinianized ideal gives one
irreducible component: the pure powers of its label that stay below ``D``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import NotGenericError
from .monomial import MonomialIdeal, artinianize, contains, deform, is_generic
from .scarf import scarf_complex


@dataclass(frozen=True, order=True)
class IrreducibleComponent:
    """``<x_s^p_s : s in entries>``, stored as sorted ``(variable, exponent)`` pairs."""

    entries: tuple

    def __contains__(self, m: Sequence[int]) -> bool:
        return any(m[s] >= p for s, p in self.entries)

    @property
    def size(self) -> int:
        return len(self.entries)

    def to_json(self, var_names: Sequence[str]) -> dict:
        return {var_names[s]: p for s, p in self.entries}

    def format(self, var_names: Sequence[str]) -> str:
        body = ", ".join(var_names[s] + (f"^{p}" if p > 1 else "") for s, p in self.entries)
        return f"⟨{body}⟩"


@dataclass(frozen=True)
class Decomposition:
    ideal: MonomialIdeal
    components: tuple  # IrreducibleComponent, canonical order
    D: int
    facets: tuple  # facet of origin per component, indices into `artinian`
    artinian: MonomialIdeal
    irredundant: bool = True

    def __len__(self) -> int:
        return len(self.components)

    def to_json(self) -> list[dict]:
        return [c.to_json(self.ideal.var_names) for c in self.components]

    def format(self) -> str:
        return " ∩ ".join(c.format(self.ideal.var_names) for c in self.components)

    def contains(self, m: Sequence[int]) -> bool:
        return all(m in c for c in self.components)


def _components(artinian: MonomialIdeal, faces_and_labels, D: int):
    found = {}
    for facet, label in faces_and_labels:
        comp = IrreducibleComponent(tuple((s, p) for s, p in enumerate(label) if p < D))
        found.setdefault(comp, facet)
    comps = tuple(sorted(found))
    return comps, tuple(found[c] for c in comps)


def irreducible_decomposition(ideal: MonomialIdeal, D: int | None = None,
                              via_deformation: bool = False) -> Decomposition:
    """Irreducible components of a generic ideal, one per facet of the
    artinianized Scarf complex.

    With ``via_deformation`` a non-generic ideal is decomposed through a
    generic deformation of its artinianization; the result is a valid but
    possibly redundant decomposition.
    """
    star = artinianize(ideal, D)
    if D is None:
        D = 1 + max((e for g in ideal.generators for e in g), default=0)
    if is_generic(ideal):
        sc = scarf_complex(star)
        comps, facets = _components(star, ((f, sc.label(f)) for f in sc.facets()), D)
        return Decomposition(ideal, comps, D, facets, star, True)
    if not via_deformation:
        raise NotGenericError("ideal is not generic; pass via_deformation=True")
    dm = deform(star)
    back = {d: i for i, d in enumerate(dm.correspondence)}
    dsc = scarf_complex(dm.deformed)
    pairs = []
    for f in dsc.facets():
        orig = tuple(sorted(back[v] for v in f))
        label = tuple(max(star.generators[i][s] for i in orig) for s in range(star.n))
        pairs.append((orig, label))
    comps, facets = _components(star, pairs, D)
    return Decomposition(ideal, comps, D, facets, star, False)


def _require_generic(ideal: MonomialIdeal):
    if not is_generic(ideal):
        raise NotGenericError("dimension/depth are computed for generic ideals only")


def dimension(ideal: MonomialIdeal) -> int:
    """Krull dimension of S/M: ``n`` minus the size of the smallest component."""
    _require_generic(ideal)
    dec = irreducible_decomposition(ideal)
    return max(ideal.n - c.size for c in dec.components)


def depth(ideal: MonomialIdeal) -> int:
    """Depth of S/M: fewest added pure powers ``x_s^D`` in any artinianized facet."""
    _require_generic(ideal)
    star = artinianize(ideal)
    D = 1 + max((e for g in ideal.generators for e in g), default=0)
    added = {i for i, g in enumerate(star.generators) if D in g}
    sc = scarf_complex(star)
    return min(len(added.intersection(f)) for f in sc.facets())


def is_cohen_macaulay(ideal: MonomialIdeal) -> bool:
    """Generic M is Cohen-Macaulay iff all irreducible components have the same size."""
    _require_generic(ideal)
    dec = irreducible_decomposition(ideal)
    pure = len({c.size for c in dec.components}) == 1
    if pure != (dimension(ideal) == depth(ideal)):
        raise AssertionError("purity and dim == depth disagree")
    return pure


# -- verification ----------------------------------------------------------------

def verification_box(dec: Decomposition) -> list[tuple]:
    return list(itertools.product(range(dec.D), repeat=dec.ideal.n))


def membership_counterexample(dec: Decomposition, box: Sequence[Sequence[int]] | None = None):
    """First monomial in the box where ideal membership and the intersection disagree."""
    if box is None:
        box = verification_box(dec)
    for m in box:
        if contains(dec.ideal, m) != dec.contains(m):
            return tuple(m)
    return None


def redundant_components(dec: Decomposition, box: Sequence[Sequence[int]] | None = None) -> list:
    """Components that could be dropped without changing the intersection on the box."""
    if box is None:
        box = verification_box(dec)
    out = []
    for k, comp in enumerate(dec.components):
        others = dec.components[:k] + dec.components[k + 1:]
        if not any(m not in comp and all(m in c for c in others) for m in box):
            out.append(comp)
    return out


def irredundancy_witness(dec: Decomposition, k: int) -> tuple:
    """``m_I / (x_1...x_n)`` for the facet behind component ``k``."""
    facet = dec.facets[k]
    gens = dec.artinian.generators
    label = [max(gens[i][s] for i in facet) for s in range(dec.ideal.n)]
    return tuple(e - 1 for e in label)


def witness_ok(dec: Decomposition, k: int) -> bool:
    w = irredundancy_witness(dec, k)
    if min(w) < 0:
        return False
    return w not in dec.components[k] and all(
        w in c for j, c in enumerate(dec.components) if j != k)
