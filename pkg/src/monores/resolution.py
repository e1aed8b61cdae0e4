"""Free resolutions built from Scarf complexes, Hilbert series, the DG product
and Betti-number upper bounds."""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .complexes import (FreeChainComplex, LabeledComplex, SimplicialComplex, chain_complex,
                        full_simplex, is_exact)
from .errors import MonomialError, NotGenericError
from .monomial import (DeformationMap, MonomialIdeal, deform, is_generic, mul, quotient,
                       standard_monomials, validate_deformation)
from .scarf import scarf_complex


@dataclass
class Resolution:
    complex: FreeChainComplex
    labeled: LabeledComplex
    minimal: bool
    source: str  # "scarf", "deformation" or "taylor"
    deformation: DeformationMap | None = None

    @property
    def betti(self) -> list[int]:
        return betti_numbers(self)

    @property
    def length(self) -> int:
        return self.complex.length

    def to_json(self) -> dict:
        data = self.complex.to_json()
        return {"betti": self.betti, "minimal": self.minimal, "length": self.length,
                "source": self.source, "multidegrees": data["multidegrees"],
                "matrices": data["matrices"]}


def minimal_resolution(ideal: MonomialIdeal, debug: bool = False) -> Resolution:
    """Minimal free resolution of S/M for a generic ideal, from its Scarf complex."""
    if not is_generic(ideal):
        raise NotGenericError("ideal is not generic; use resolve_by_deformation")
    sc = scarf_complex(ideal)
    fc = chain_complex(sc.base)
    if not fc.is_minimal():
        raise AssertionError("Scarf resolution of a generic ideal has a unit entry")
    if debug and not is_exact(sc.base):
        raise AssertionError("Scarf resolution of a generic ideal is not exact")
    return Resolution(fc, sc.base, True, "scarf")


def resolve_by_deformation(ideal: MonomialIdeal, deformation: DeformationMap | None = None) -> Resolution:
    """Free resolution of S/M supported on the Scarf complex of a generic deformation.

    Faces of the deformed Scarf complex are carried back to the original
    generator indices and labeled with the original generators.
    """
    if deformation is None:
        deformation = deform(ideal)
    else:
        if deformation.original != ideal:
            raise MonomialError("deformation was built for a different ideal")
        if not validate_deformation(deformation.original, deformation.deformed,
                                    deformation.correspondence):
            raise MonomialError("supplied deformation is not a valid generic deformation")
    back = {d: i for i, d in enumerate(deformation.correspondence)}
    dsc = scarf_complex(deformation.deformed)
    faces = frozenset(tuple(sorted(back[v] for v in f)) for f in dsc.complex.faces)
    lc = LabeledComplex(SimplicialComplex(ideal.r, faces), ideal)
    fc = chain_complex(lc)
    return Resolution(fc, lc, fc.is_minimal(), "deformation", deformation)


def taylor_resolution(ideal: MonomialIdeal, cap: int | None = None) -> Resolution:
    lc = full_simplex(ideal) if cap is None else full_simplex(ideal, cap)
    fc = chain_complex(lc)
    return Resolution(fc, lc, fc.is_minimal(), "taylor")


def betti_numbers(res: Resolution) -> list[int]:
    """Rank vector ``(beta_0, beta_1, ...)`` of the resolution (S counted in degree 0)."""
    ranks = res.complex.ranks
    while len(ranks) > 1 and ranks[-1] == 0:
        ranks = ranks[:-1]
    return list(ranks)


# -- Hilbert series ------------------------------------------------------------

@dataclass(frozen=True)
class HilbertNumerator:
    """Signed terms ``(coefficient, exponents)`` of the multigraded numerator."""

    terms: tuple

    def to_json(self) -> list[dict]:
        return [{"sign": c, "exponents": list(e)} for c, e in self.terms]

    def as_dict(self) -> dict:
        return {e: c for c, e in self.terms}

    def format(self, var_names: Sequence[str]) -> str:
        from .monomial import format_monomial
        out = []
        for c, e in sorted(self.terms, key=lambda t: (sum(t[1]), t[1])):
            mono = format_monomial(e, var_names)
            coef = "" if abs(c) == 1 else str(abs(c))
            body = coef + mono if mono != "1" or not coef else coef
            out.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(out)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def hilbert_numerator(ideal: MonomialIdeal, allow_deformation: bool = False) -> HilbertNumerator:
    """Alternating sum of Scarf face labels.

    For a generic ideal all multidegrees are distinct.  With
    ``allow_deformation`` a non-generic ideal is handled through its
    deformation resolution and like terms are combined.
    """
    if is_generic(ideal):
        lc = scarf_complex(ideal).base
        distinct = True
    elif allow_deformation:
        lc = resolve_by_deformation(ideal).labeled
        distinct = False
    else:
        raise NotGenericError("ideal is not generic; pass allow_deformation=True")
    acc = defaultdict(int)
    for f in [()] + lc.complex.sorted_faces():
        acc[lc.label(f)] += -1 if len(f) % 2 else 1
    if distinct and len(acc) != 1 + len(lc.complex.faces):
        raise AssertionError("repeated multidegree in a generic Scarf complex")
    terms = tuple((c, e) for e, c in sorted(acc.items()) if c)
    return HilbertNumerator(terms)


def default_box(ideal: MonomialIdeal) -> tuple[int, ...]:
    """Per-variable bound: largest exponent plus 2."""
    top = [max((g[s] for g in ideal.generators), default=0) for s in range(ideal.n)]
    return tuple(t + 2 for t in top)


def hilbert_series_box(num: HilbertNumerator, bound: Sequence[int]) -> np.ndarray:
    """Coefficients of ``num / prod(1 - x_i)`` on the box ``0..bound``, as an int array."""
    shape = tuple(b + 1 for b in bound)
    arr = np.zeros(shape, dtype=np.int64)
    for c, e in num.terms:
        if all(a <= b for a, b in zip(e, bound)):
            arr[tuple(e)] += c
    for axis in range(len(shape)):
        arr = np.cumsum(arr, axis=axis)
    return arr


def hilbert_matches_standard_monomials(ideal: MonomialIdeal, bound: Sequence[int] | None = None,
                                       num: HilbertNumerator | None = None) -> bool:
    """Compare the truncated series against direct enumeration of standard monomials."""
    if bound is None:
        bound = default_box(ideal)
    if num is None:
        num = hilbert_numerator(ideal, allow_deformation=True)
    series = hilbert_series_box(num, bound)
    want = np.zeros_like(series)
    for m in standard_monomials(ideal, bound):
        want[m] = 1
    return bool(np.array_equal(series, want))


# -- DG algebra ----------------------------------------------------------------

def merge_sign(I: Sequence[int], J: Sequence[int]) -> int:
    """Sign of the permutation sorting the concatenation ``I + J`` (disjoint)."""
    inversions = sum(1 for i in I for j in J if i > j)
    return -1 if inversions % 2 else 1


def dg_multiply(res: Resolution, I: Sequence[int], J: Sequence[int]):
    """Product ``e_I * e_J`` as ``(sign, monomial, face)`` or ``None`` for zero.

    Nonzero only when I and J are disjoint and their union is a face; the
    coefficient is ``m_I m_J / m_{I u J}``.
    """
    if res.source not in ("scarf", "deformation", "taylor"):
        raise MonomialError(f"no product on a {res.source} resolution")
    I, J = tuple(sorted(I)), tuple(sorted(J))
    cx = res.labeled.complex
    for face in (I, J):
        if face not in cx:
            raise KeyError(f"{face} is not a basis face")
    if set(I) & set(J):
        return None
    U = tuple(sorted(I + J))
    if U not in cx:
        return None
    lab = res.labeled.label
    coef = quotient(mul(lab(I), lab(J)), lab(U))
    return merge_sign(I, J), coef, U


# elements are {face: {exponents: int}}

def _add(acc, face, exps, c):
    if not c:
        return
    slot = acc.setdefault(face, {})
    v = slot.get(exps, 0) + c
    if v:
        slot[exps] = v
    else:
        del slot[exps]
        if not slot:
            del acc[face]


def basis_element(res: Resolution, face) -> dict:
    return {tuple(face): {(0,) * res.labeled.ideal.n: 1}}


def element_product(res: Resolution, a: dict, b: dict) -> dict:
    out: dict = {}
    for fa, ca in a.items():
        for fb, cb in b.items():
            p = dg_multiply(res, fa, fb)
            if p is None:
                continue
            s, e, U = p
            for ea, va in ca.items():
                for eb, vb in cb.items():
                    _add(out, U, mul(mul(ea, eb), e), s * va * vb)
    return out


def element_differential(res: Resolution, a: dict) -> dict:
    out: dict = {}
    lab = res.labeled.label
    for f, coeffs in a.items():
        for k in range(len(f)):
            sub = f[:k] + f[k + 1:]
            q = quotient(lab(f), lab(sub))
            sign = 1 if k % 2 == 0 else -1
            for e, v in coeffs.items():
                _add(out, sub, mul(e, q), sign * v)
    return out


def _scale(a: dict, c: int) -> dict:
    return {f: {e: c * v for e, v in coeffs.items()} for f, coeffs in a.items()}


def _sum(*elems: dict) -> dict:
    out: dict = {}
    for a in elems:
        for f, coeffs in a.items():
            for e, v in coeffs.items():
                _add(out, f, e, v)
    return out


@dataclass
class DGReport:
    pairs: int = 0
    triples: int = 0
    skew_failures: list = field(default_factory=list)
    assoc_failures: list = field(default_factory=list)
    leibniz_failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.skew_failures or self.assoc_failures or self.leibniz_failures)


def check_dg_axioms(res: Resolution, triples: bool = True) -> DGReport:
    """Test skew-commutativity, associativity and the Leibniz rule on all
    basis pairs (and triples), including the unit ``e_()``."""
    faces = [()] + res.labeled.complex.sorted_faces()
    el = {f: basis_element(res, f) for f in faces}
    rep = DGReport()
    for I, J in itertools.product(faces, repeat=2):
        rep.pairs += 1
        ab = element_product(res, el[I], el[J])
        ba = element_product(res, el[J], el[I])
        if ab != _scale(ba, (-1) ** (len(I) * len(J))):
            rep.skew_failures.append((I, J))
        lhs = element_differential(res, ab)
        rhs = _sum(element_product(res, element_differential(res, el[I]), el[J]),
                   _scale(element_product(res, el[I], element_differential(res, el[J])),
                          (-1) ** len(I)))
        if lhs != rhs:
            rep.leibniz_failures.append((I, J))
    if triples:
        for I, J, K in itertools.product(faces, repeat=3):
            rep.triples += 1
            left = element_product(res, element_product(res, el[I], el[J]), el[K])
            right = element_product(res, el[I], element_product(res, el[J], el[K]))
            if left != right:
                rep.assoc_failures.append((I, J, K))
    return rep


# -- upper bounds ----------------------------------------------------------------

def gale_facets(n: int, r: int) -> list[tuple]:
    """Facets of the cyclic n-polytope on r vertices, by Gale's evenness condition."""
    out = []
    for S in itertools.combinations(range(r), n):
        members = set(S)
        outside = [v for v in range(r) if v not in members]
        if all(sum(1 for s in S if i < s < j) % 2 == 0 for i, j in zip(outside, outside[1:])):
            out.append(S)
    return out


def cyclic_face_numbers(n: int, r: int) -> list[int]:
    """Face numbers ``c_0 .. c_{n-1}`` of the cyclic n-polytope with r vertices."""
    if n < 2:
        raise MonomialError("cyclic polytopes need n >= 2")
    if r <= n:
        raise MonomialError(f"cyclic {n}-polytope needs more than {n} vertices, got {r}")
    facets = gale_facets(n, r)
    counts = []
    for k in range(1, n + 1):
        faces = set()
        for f in facets:
            faces.update(itertools.combinations(f, k))
        counts.append(len(faces))
    return counts


@dataclass
class BoundReport:
    n: int
    r: int
    betti: list
    face_numbers: list | None
    checks: list  # (dimension i, f_i, bound, holds)
    source: str

    @property
    def ok(self) -> bool:
        return all(c[3] for c in self.checks)

    @property
    def tight(self) -> bool:
        return bool(self.checks) and all(c[1] == c[2] for c in self.checks)

    def to_json(self) -> dict:
        return {"n": self.n, "r": self.r, "betti": self.betti, "cyclic": self.face_numbers,
                "source": self.source, "ok": self.ok, "tight": self.tight,
                "checks": [{"dim": i, "faces": f, "bound": b, "holds": h} for i, f, b, h in self.checks]}


def check_upper_bound(ideal: MonomialIdeal) -> BoundReport:
    """Compare i-face counts of the resolution with cyclic-polytope face numbers.

    ``f_i = beta_{i+1}`` must satisfy ``f_i <= c_i(n, r)`` for ``1 <= i <= n-2``
    and ``f_{n-1} <= c_{n-1}(n, r) - 1``.  Non-generic ideals are measured
    through their deformation, whose ranks bound the true Betti numbers.
    """
    if is_generic(ideal):
        res, src = minimal_resolution(ideal), "scarf"
    else:
        res, src = resolve_by_deformation(ideal), "deformation"
    betti = betti_numbers(res)
    n, r = ideal.n, ideal.r
    if r <= n or n < 2:
        return BoundReport(n, r, betti, None, [], src)
    c = cyclic_face_numbers(n, r)
    checks = []
    for i in range(1, n):
        f = betti[i + 1] if i + 1 < len(betti) else 0
        bound = c[i] - (1 if i == n - 1 else 0)
        checks.append((i, f, bound, f <= bound))
    return BoundReport(n, r, betti, c, checks, src)

