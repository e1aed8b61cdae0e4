"""Simplicial complexes, labeled chain complexes, homology and exactness.

Faces are sorted tuples of 0-based generator indices.  The empty face is
implicit in every complex; it sits in homological degree 0 of a labeled
chain complex (the copy of S), and a face with ``j`` vertices sits in
degree ``j``.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import CapExceeded, MonomialError
from .linalg import RATIONALS, check_field, rank
from .monomial import MonomialIdeal, divides, format_monomial, lcm, quotient, unit

TAYLOR_CAP = 20


@dataclass(frozen=True)
class SimplicialComplex:
    """Downward-closed family of non-empty faces on ``range(vertex_count)``."""

    vertex_count: int
    faces: frozenset

    def __post_init__(self):
        faces = frozenset(tuple(sorted(f)) for f in self.faces)
        for f in faces:
            if not f:
                raise MonomialError("the empty face is implicit; do not list it")
            if len(set(f)) != len(f) or f[0] < 0 or f[-1] >= self.vertex_count:
                raise MonomialError(f"bad face {f}")
            if len(f) > 1:
                for k in range(len(f)):
                    sub = f[:k] + f[k + 1:]
                    if sub not in faces:
                        raise MonomialError(f"not downward closed: {f} present, {sub} missing")
        object.__setattr__(self, "faces", faces)

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[int]], vertex_count: int | None = None):
        facets = [tuple(sorted(f)) for f in facets]
        if vertex_count is None:
            vertex_count = 1 + max((max(f) for f in facets if f), default=-1)
        faces = set()
        for f in facets:
            for k in range(1, len(f) + 1):
                faces.update(itertools.combinations(f, k))
        return cls(vertex_count, frozenset(faces))

    @classmethod
    def simplex(cls, vertices: Iterable[int], vertex_count: int | None = None):
        vertices = tuple(sorted(vertices))
        if vertex_count is None:
            vertex_count = 1 + max(vertices, default=-1)
        return cls.from_facets([vertices] if vertices else [], vertex_count)

    def sorted_faces(self) -> list[tuple]:
        return sorted(self.faces, key=lambda f: (len(f), f))

    def faces_of_dim(self, d: int) -> list[tuple]:
        if d == -1:
            return [()]
        return sorted(f for f in self.faces if len(f) == d + 1)

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.faces), default=0) - 1

    def facets(self) -> list[tuple]:
        out = []
        for f in self.faces:
            if not any(len(g) == len(f) + 1 and set(f) < set(g) for g in self.faces):
                out.append(f)
        return sorted(out, key=lambda f: (len(f), f))

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets()}) <= 1

    def f_vector(self) -> list[int]:
        """Face counts by dimension, starting at dimension 0."""
        counts = [0] * (self.dim + 1)
        for f in self.faces:
            counts[len(f) - 1] += 1
        return counts

    def vertices(self) -> list[int]:
        return sorted(f[0] for f in self.faces if len(f) == 1)

    def __contains__(self, face) -> bool:
        face = tuple(sorted(face))
        return not face or face in self.faces

    def __len__(self) -> int:
        return len(self.faces)


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced homology ranks, ``ranks[d]`` for ``d >= -1`` (missing means 0)."""

    ranks: dict
    field: int = RATIONALS

    def __getitem__(self, d: int) -> int:
        return self.ranks.get(d, 0)

    @property
    def acyclic(self) -> bool:
        return all(v == 0 for v in self.ranks.values())

    def as_list(self, top: int) -> list[int]:
        return [self[d] for d in range(-1, top + 1)]


def boundary_rows(faces_hi: Sequence[tuple], faces_lo: Sequence[tuple]) -> list[dict]:
    """Simplicial boundary map as sparse rows indexed by ``faces_hi``."""
    pos = {f: k for k, f in enumerate(faces_lo)}
    rows = []
    for f in faces_hi:
        row = {}
        for j in range(len(f)):
            row[pos[f[:j] + f[j + 1:]]] = 1 if j % 2 == 0 else -1
        rows.append(row)
    return rows


def reduced_homology(c: SimplicialComplex, field: int = RATIONALS) -> HomologyProfile:
    """Reduced simplicial homology ranks over Q or GF(p), by rank-nullity."""
    check_field(field)
    top = c.dim
    chains = {d: c.faces_of_dim(d) for d in range(-1, top + 1)}
    ranks_d = {}  # rank of boundary C_d -> C_{d-1}
    for d in range(0, top + 1):
        ranks_d[d] = rank(boundary_rows(chains[d], chains[d - 1]), field) if chains[d] else 0
    out = {}
    for d in range(-1, top + 1):
        h = len(chains[d]) - ranks_d.get(d, 0) - ranks_d.get(d + 1, 0)
        if h:
            out[d] = h
    return HomologyProfile(out, field)


@dataclass(frozen=True)
class LabeledComplex:
    """A simplicial complex whose vertex ``i`` carries generator ``m_i``."""

    complex: SimplicialComplex
    ideal: MonomialIdeal
    _labels: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.complex.vertex_count != self.ideal.r:
            raise MonomialError(
                f"complex has {self.complex.vertex_count} vertices, ideal has {self.ideal.r} generators")
        object.__setattr__(self, "_labels", {})

    def label(self, face: Sequence[int]) -> tuple:
        face = tuple(face)
        got = self._labels.get(face)
        if got is None:
            gens = self.ideal.generators
            got = lcm(*(gens[i] for i in face)) if face else unit(self.ideal.n)
            self._labels[face] = got
        return got


@dataclass
class FreeChainComplex:
    """Multigraded free complex with one basis element per face.

    ``basis[j]`` lists the faces in homological degree ``j`` (with
    ``basis[0] == [()]``) and ``degrees[j]`` their multidegrees.
    ``differentials[j]`` (``j >= 1``) maps degree ``j`` to ``j - 1`` and
    is a dict ``{(row, col): (sign, exponents)}``.
    """

    var_names: tuple
    basis: list
    degrees: list
    differentials: list
    _pos: list = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        self._pos = [{f: k for k, f in enumerate(b)} for b in self.basis]

    @property
    def ranks(self) -> list[int]:
        return [len(b) for b in self.basis]

    @property
    def length(self) -> int:
        return max((j for j, b in enumerate(self.basis) if b), default=0)

    def position(self, face: Sequence[int]) -> tuple[int, int]:
        face = tuple(face)
        j = len(face)
        if j >= len(self._pos) or face not in self._pos[j]:
            raise KeyError(f"{face} is not a basis face")
        return j, self._pos[j][face]

    def entries(self, j: int):
        for (row, col), val in sorted(self.differentials[j].items()):
            yield row, col, val

    def is_minimal(self) -> bool:
        """No differential entry is a non-zero constant."""
        return all(any(exps) for j in range(1, len(self.differentials))
                   for (_, exps) in self.differentials[j].values())

    def check_d_squared(self) -> bool:
        """Symbolic check that consecutive differentials compose to zero."""
        for j in range(2, len(self.differentials)):
            hi = self.differentials[j]
            lo_by_col = defaultdict(list)
            for (row, col), val in self.differentials[j - 1].items():
                lo_by_col[col].append((row, val))
            acc = defaultdict(int)
            for (mid, col), (s1, e1) in hi.items():
                for row, (s2, e2) in lo_by_col.get(mid, ()):
                    acc[(row, col, tuple(a + b for a, b in zip(e1, e2)))] += s1 * s2
            if any(acc.values()):
                return False
        return True

    def check_multidegrees(self) -> bool:
        for j in range(1, len(self.differentials)):
            for (row, col), (_, exps) in self.differentials[j].items():
                want = tuple(a + b for a, b in zip(self.degrees[j - 1][row], exps))
                if want != self.degrees[j][col]:
                    return False
        return True

    def dense(self, j: int) -> list[list[tuple[int, tuple] | None]]:
        rows, cols = len(self.basis[j - 1]), len(self.basis[j])
        out = [[None] * cols for _ in range(rows)]
        for (row, col), val in self.differentials[j].items():
            out[row][col] = val
        return out

    def format_matrix(self, j: int) -> str:
        def cell(v):
            if v is None:
                return "0"
            s, e = v
            mono = format_monomial(e, self.var_names)
            return mono if s > 0 else "-" + mono
        grid = [[cell(v) for v in row] for row in self.dense(j)]
        if not grid or not grid[0]:
            return "[]"
        width = max(len(c) for row in grid for c in row)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in grid)

    def to_json(self) -> dict:
        return {
            "ranks": self.ranks,
            "multidegrees": [[list(d) for d in degs] for degs in self.degrees],
            "matrices": [
                [[row, col, s, list(e)] for (row, col), (s, e) in sorted(self.differentials[j].items())]
                for j in range(1, len(self.differentials))
            ],
        }


def chain_complex(lc: LabeledComplex) -> FreeChainComplex:
    """Homogenized chain complex of a labeled simplicial complex."""
    faces = lc.complex.sorted_faces()
    top = max((len(f) for f in faces), default=0)
    basis = [[()]] + [[] for _ in range(top)]
    for f in faces:
        basis[len(f)].append(f)
    degrees = [[lc.label(f) for f in b] for b in basis]
    pos = [{f: k for k, f in enumerate(b)} for b in basis]
    diffs = [None]
    for j in range(1, top + 1):
        d = {}
        for col, f in enumerate(basis[j]):
            mf = degrees[j][col]
            for k, i in enumerate(f):
                sub = f[:k] + f[k + 1:]
                row = pos[j - 1][sub]
                d[(row, col)] = (1 if k % 2 == 0 else -1, quotient(mf, degrees[j - 1][row]))
        diffs.append(d)
    return FreeChainComplex(lc.ideal.var_names, basis, degrees, diffs)


def full_simplex(ideal: MonomialIdeal, cap: int = TAYLOR_CAP) -> LabeledComplex:
    if ideal.r > cap:
        raise CapExceeded(f"{ideal.r} generators exceeds the Taylor cap of {cap}")
    return LabeledComplex(SimplicialComplex.simplex(range(ideal.r), ideal.r), ideal)


def taylor_complex(ideal: MonomialIdeal, cap: int = TAYLOR_CAP) -> FreeChainComplex:
    """Taylor complex: chain complex of the full simplex on the generators."""
    return chain_complex(full_simplex(ideal, cap))


def restrict(lc: LabeledComplex, m: Sequence[int]) -> SimplicialComplex:
    """Subcomplex of faces whose label divides ``m``."""
    keep = [f for f in lc.complex.faces if divides(lc.label(f), m)]
    return SimplicialComplex(lc.complex.vertex_count, frozenset(keep))


def lcm_lattice(ideal: MonomialIdeal, cap: int = TAYLOR_CAP) -> list[tuple]:
    """All distinct lcms of non-empty generator subsets, sorted."""
    if ideal.r > cap:
        raise CapExceeded(f"{ideal.r} generators exceeds the subset cap of {cap}")
    seen: set = set()
    for g in ideal.generators:
        seen |= {lcm(g, m) for m in seen}
        seen.add(g)
    return sorted(seen)


def exactness_failures(lc: LabeledComplex, field: int = RATIONALS, cap: int = TAYLOR_CAP):
    """Yield ``(m, profile)`` for each lcm multidegree where exactness fails."""
    check_field(field)
    for m in lcm_lattice(lc.ideal, cap):
        sub = restrict(lc, m)
        if not sub.faces:
            continue
        h = reduced_homology(sub, field)
        if not h.acyclic:
            yield m, h


def is_exact(lc: LabeledComplex, field: int = RATIONALS, cap: int = TAYLOR_CAP) -> bool:
    """Exactness via the restriction criterion at every lcm multidegree."""
    return next(exactness_failures(lc, field, cap), None) is None


def betti_oracle(ideal: MonomialIdeal, field: int = RATIONALS, cap: int = TAYLOR_CAP) -> dict:
    """Multigraded Betti numbers read off the Taylor complex.

    Returns ``{multidegree: {degree: rank}}`` with zero ranks omitted.  In
    multidegree ``b`` the Taylor complex tensored with the residue field has
    a basis of subsets with lcm ``b`` and keeps only the differential
    entries whose monomial coefficient is 1.
    """
    check_field(field)
    if ideal.r > cap:
        raise CapExceeded(f"{ideal.r} generators exceeds the Taylor cap of {cap}")
    gens = ideal.generators
    n = ideal.n
    by_label = defaultdict(list)
    labels = {(): unit(n)}
    for k in range(1, ideal.r + 1):
        for f in itertools.combinations(range(ideal.r), k):
            labels[f] = lcm(labels[f[:-1]], gens[f[-1]]) if k > 1 else gens[f[0]]
    for f, b in labels.items():
        by_label[b].append(f)
    out = {}
    for b, faces in by_label.items():
        by_deg = defaultdict(list)
        for f in faces:
            by_deg[len(f)].append(f)
        pos = {j: {f: k for k, f in enumerate(sorted(fs))} for j, fs in by_deg.items()}
        rk = {}
        for j, cols in pos.items():
            if j == 0 or (j - 1) not in pos:
                continue
            rows = []
            for f in cols:
                row = {}
                for k in range(len(f)):
                    sub = f[:k] + f[k + 1:]
                    if sub in pos[j - 1]:
                        row[pos[j - 1][sub]] = 1 if k % 2 == 0 else -1
                rows.append(row)
            rk[j] = rank(rows, field)
        ranks = {}
        for j, fs in pos.items():
            h = len(fs) - rk.get(j, 0) - rk.get(j + 1, 0)
            if h:
                ranks[j] = h
        if ranks:
            out[b] = ranks
    return dict(sorted(out.items()))


def oracle_totals(oracle: dict) -> list[int]:
    """Total Betti numbers ``(beta_0, beta_1, ...)`` from a multigraded table."""
    top = max((j for ranks in oracle.values() for j in ranks), default=0)
    tot = [0] * (top + 1)
    for ranks in oracle.values():
        for j, v in ranks.items():
            tot[j] += v
    return tot
