"""Exponent-vector arithmetic, monomial ideals, genericity and deformations.

A monomial is a plain tuple of non-negative integers (its exponent vector).
Monomial ideals keep a minimal generating set in ascending lexicographic
order, so two ideals are equal exactly when their representations are.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import MonomialError

Monomial = tuple  # tuple[int, ...]


def unit(n: int) -> Monomial:
    """The constant monomial 1 in ``n`` variables (label of the empty face)."""
    return (0,) * n


def as_monomial(exps: Iterable[int]) -> Monomial:
    m = tuple(int(e) for e in exps)
    if any(e < 0 for e in m):
        raise MonomialError(f"negative exponent in {m}")
    return m


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff the monomial ``a`` divides ``b`` (componentwise ``a <= b``)."""
    if len(a) != len(b):
        raise MonomialError(f"length mismatch: {len(a)} vs {len(b)}")
    return all(x <= y for x, y in zip(a, b))


def lcm(*monomials: Sequence[int]) -> Monomial:
    if not monomials:
        raise MonomialError("lcm of no monomials; use unit(n)")
    return tuple(max(col) for col in zip(*monomials))


def mul(a: Sequence[int], b: Sequence[int]) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def quotient(a: Sequence[int], b: Sequence[int]) -> Monomial:
    """``a / b``; ``b`` must divide ``a``."""
    out = tuple(x - y for x, y in zip(a, b))
    if any(e < 0 for e in out):
        raise MonomialError(f"{tuple(b)} does not divide {tuple(a)}")
    return out


def default_var_names(n: int) -> tuple[str, ...]:
    if n <= 4:
        return tuple("xyzw"[:n])
    return tuple(f"x{i + 1}" for i in range(n))


def format_monomial(m: Sequence[int], var_names: Sequence[str], sep: str = "") -> str:
    parts = []
    for name, e in zip(var_names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return sep.join(parts) if parts else "1"


@dataclass(frozen=True)
class MonomialIdeal:
    """An ideal given by its minimal monomial generators.

    ``generators`` must be pairwise incomparable under divisibility and
    sorted lexicographically; use :func:`minimalize` to build one from an
    arbitrary list.  An empty generator list is the zero ideal.
    """

    var_names: tuple[str, ...]
    generators: tuple[Monomial, ...]
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        n = len(self.var_names)
        gens = self.generators
        for g in gens:
            if len(g) != n:
                raise MonomialError(f"generator {g} does not have {n} exponents")
            if any((not isinstance(e, int)) or e < 0 for e in g):
                raise MonomialError(f"bad exponents in {g}")
        if list(gens) != sorted(set(gens)):
            raise MonomialError("generators must be distinct and in lexicographic order")
        for a, b in itertools.permutations(gens, 2):
            if divides(a, b):
                raise MonomialError(f"generator {a} divides {b}; not minimal")
        object.__setattr__(self, "_index", {g: i for i, g in enumerate(gens)})

    @property
    def n(self) -> int:
        return len(self.var_names)

    @property
    def r(self) -> int:
        return len(self.generators)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __getitem__(self, i: int) -> Monomial:
        return self.generators[i]

    def index(self, m: Sequence[int]) -> int:
        """Position of a generator in the canonical order."""
        try:
            return self._index[tuple(m)]
        except KeyError:
            raise MonomialError(f"{tuple(m)} is not a minimal generator") from None

    def format(self, m: Sequence[int]) -> str:
        return format_monomial(m, self.var_names)

    def __str__(self) -> str:
        return "<" + ", ".join(self.format(g) for g in self.generators) + ">"

    def to_json(self) -> dict:
        return {"vars": list(self.var_names), "generators": [list(g) for g in self.generators]}

    def subideal(self, m: Sequence[int]) -> tuple["MonomialIdeal", list[int]]:
        """``M[m]``: generators dividing ``m``, plus their indices in ``self``."""
        idx = [i for i, g in enumerate(self.generators) if divides(g, m)]
        return MonomialIdeal(self.var_names, tuple(self.generators[i] for i in idx)), idx

    def pure_power_index(self, s: int) -> int | None:
        """Index of the generator that is a pure power of variable ``s``, if any."""
        for i, g in enumerate(self.generators):
            if g[s] > 0 and all(e == 0 for t, e in enumerate(g) if t != s):
                return i
        return None

    @property
    def is_artinian(self) -> bool:
        return all(self.pure_power_index(s) is not None for s in range(self.n))


def minimalize(monomials: Iterable[Sequence[int]], var_names: Sequence[str] | None = None) -> MonomialIdeal:
    """Divisibility-minimal, deduplicated, canonically ordered generating set."""
    ideal, _ = minimalize_report(monomials, var_names)
    return ideal


def minimalize_report(monomials, var_names=None):
    """Like :func:`minimalize` but also return the dropped (non-minimal or repeated) inputs."""
    mons = [as_monomial(m) for m in monomials]
    if var_names is None:
        if not mons:
            raise MonomialError("cannot infer variable count from an empty generator list")
        var_names = default_var_names(len(mons[0]))
    var_names = tuple(var_names)
    uniq = sorted(set(mons))
    keep = [m for m in uniq if not any(o != m and divides(o, m) for o in uniq)]
    dropped = list(mons)
    for m in keep:
        dropped.remove(m)
    return MonomialIdeal(var_names, tuple(keep)), dropped


def lcm_of(ideal: MonomialIdeal, face: Iterable[int]) -> Monomial:
    """Least common multiple of the generators indexed by ``face``."""
    face = list(face)
    if not face:
        raise MonomialError("empty face has no lcm; its label is unit(n)")
    return lcm(*(ideal.generators[i] for i in face))


def contains(ideal: MonomialIdeal, m: Sequence[int]) -> bool:
    return any(divides(g, m) for g in ideal.generators)


def is_generic(ideal: MonomialIdeal) -> bool:
    """No variable carries the same non-zero exponent in two generators."""
    for s in range(ideal.n):
        col = [g[s] for g in ideal.generators if g[s] > 0]
        if len(col) != len(set(col)):
            return False
    return True


def standard_monomials(ideal: MonomialIdeal, bound: Sequence[int]) -> list[Monomial]:
    """Monomials below ``bound`` (inclusive, componentwise) that are not in the ideal."""
    if len(bound) != ideal.n or any(b < 0 for b in bound):
        raise MonomialError(f"bad bound {tuple(bound)}")
    box = itertools.product(*(range(b + 1) for b in bound))
    return [m for m in box if not contains(ideal, m)]


def artinianize(ideal: MonomialIdeal, D: int | None = None) -> MonomialIdeal:
    """Add ``x_s^D`` for every variable lacking a pure-power generator.

    ``D`` defaults to one more than the largest exponent occurring anywhere.
    """
    top = max((e for g in ideal.generators for e in g), default=0)
    if D is None:
        D = top + 1
    elif D <= top:
        raise MonomialError(f"D={D} must exceed every exponent (max is {top})")
    extra = []
    for s in range(ideal.n):
        if ideal.pure_power_index(s) is None:
            p = [0] * ideal.n
            p[s] = D
            extra.append(tuple(p))
    return minimalize(list(ideal.generators) + extra, ideal.var_names)


@dataclass(frozen=True)
class DeformationMap:
    """A generic deformation: ``correspondence[i]`` is the index in
    ``deformed`` of the deformation of ``original`` generator ``i``."""

    original: MonomialIdeal
    deformed: MonomialIdeal
    correspondence: tuple[int, ...]

    @classmethod
    def from_lists(cls, original: Sequence[Sequence[int]], deformed: Sequence[Sequence[int]],
                   var_names=None) -> "DeformationMap":
        """Pair up two generator lists given in matching order."""
        if len(original) != len(deformed):
            raise MonomialError("generator lists differ in length")
        orig = minimalize(original, var_names)
        dfm = minimalize(deformed, orig.var_names)
        if orig.r != len(original) or dfm.r != len(deformed):
            raise MonomialError("deformation inputs must already be minimal generating sets")
        corr = [0] * orig.r
        for a, b in zip(original, deformed):
            corr[orig.index(a)] = dfm.index(b)
        return cls(orig, dfm, tuple(corr))

    def deformed_of(self, i: int) -> Monomial:
        return self.deformed.generators[self.correspondence[i]]

    def is_identity(self) -> bool:
        return self.original == self.deformed


def _rank_relabel(values: Sequence[int]) -> list[int]:
    """Map distinct non-zero values to 1, 2, ...; zero stays zero."""
    ranks = {v: k + 1 for k, v in enumerate(sorted(set(v for v in values if v > 0)))}
    return [ranks.get(v, 0) for v in values]


def deform(ideal: MonomialIdeal) -> DeformationMap:
    """Deterministic generic deformation of ``ideal``.

    Generator ``i`` (canonical order, counted from 1) is taken to
    ``m_i^nu * (x_1...x_n)^i`` with ``nu = r + 1`` on its non-zero
    exponents, and each variable is then relabelled to small integers.
    Ties in a variable go to the later generator; zero exponents stay zero.
    """
    if is_generic(ideal):
        return DeformationMap(ideal, ideal, tuple(range(ideal.r)))
    r, nu = ideal.r, ideal.r + 1
    bumped = [[nu * e + (i + 1) if e > 0 else 0 for e in g] for i, g in enumerate(ideal.generators)]
    cols = [_rank_relabel([row[s] for row in bumped]) for s in range(ideal.n)]
    new = [tuple(cols[s][i] for s in range(ideal.n)) for i in range(r)]
    return DeformationMap.from_lists(ideal.generators, new, ideal.var_names)


def validate_deformation(original: MonomialIdeal, deformed: MonomialIdeal,
                         correspondence: Sequence[int]) -> bool:
    """Check that ``deformed`` is generic and never reverses a strict order.

    For every variable and generator pair, a strictly smaller deformed
    exponent must come from a weakly smaller original exponent.  Zero
    exponents may stay zero or move up, subject to the same rule.
    """
    if original.r != deformed.r or original.n != deformed.n:
        return False
    if sorted(correspondence) != list(range(original.r)):
        return False
    if not is_generic(deformed):
        return False
    d = [deformed.generators[c] for c in correspondence]
    a = original.generators
    for s in range(original.n):
        for i in range(original.r):
            for j in range(original.r):
                if i != j and d[i][s] < d[j][s] and not a[i][s] <= a[j][s]:
                    return False
    return True
