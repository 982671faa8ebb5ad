"""Subdivisions and triangulations of vector configurations.

Cells are sets of 0-based indices into the configuration. A triangulation
is a subdivision whose cells are linearly independent sets of size ``m``.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from ._lp import strictly_feasible
from .errors import EmptyPolyhedron, NotATriangulation, TooLarge
from .lattice import Configuration, Vector, clear_denominators, det, dot, integer_kernel, rank, transpose

MAX_TRIANGULATION_N = 12


@dataclass(frozen=True)
class Subdivision:
    config: Configuration
    cells: frozenset
    liftingC: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "cells", frozenset(frozenset(c) for c in self.cells))

    @property
    def maximalCells(self) -> list[tuple[int, ...]]:
        return sorted(tuple(sorted(c)) for c in self.cells)

    @property
    def is_triangulation(self) -> bool:
        m = self.config.m
        return all(len(c) == m and rank(self.config.subset(sorted(c))) == m for c in self.cells)

    def used(self) -> set[int]:
        return set().union(*self.cells) if self.cells else set()

    def to_json(self) -> list[list[int]]:
        """Cells as sorted 1-based index lists."""
        return [[i + 1 for i in c] for c in self.maximalCells]

    def __eq__(self, other):
        return isinstance(other, Subdivision) and self.config == other.config and self.cells == other.cells

    def __hash__(self):
        return hash((self.config, self.cells))


class Triangulation(Subdivision):
    pass


def _triangulation(config, cells, lifting=None) -> Triangulation:
    return Triangulation(config, frozenset(frozenset(c) for c in cells), lifting)


def regular_subdivision(B: Configuration, c: Sequence[int]) -> Subdivision:
    """Cells are the active sets of the minimal faces of P_c."""
    from .polyhedra import normal_fan, polyhedron

    P = polyhedron(B, c)
    if P.is_empty:
        raise EmptyPolyhedron("P_c is empty")
    S = normal_fan(P)
    if S.is_triangulation:
        return Triangulation(S.config, S.cells, S.liftingC)
    return S


def is_unimodular(T: Subdivision) -> bool:
    vecs = T.config.vectors
    return all(len(c) == T.config.m and abs(det([vecs[i] for i in sorted(c)])) == 1 for c in T.cells)


# ---------------------------------------------------------------------------
# circuits and proper intersection


@lru_cache(maxsize=64)
def circuits(vectors: tuple[Vector, ...]) -> tuple[tuple[int, int], ...]:
    """Signed circuits as pairs of bitmasks ``(Z+, Z-)``, both orientations."""
    n = len(vectors)
    m = len(vectors[0]) if vectors else 0
    out = set()
    for k in range(1, min(n, m + 1) + 1):
        for C in itertools.combinations(range(n), k):
            vs = [vectors[i] for i in C]
            if rank(vs) != k - 1:
                continue
            if k > 1 and any(rank(vs[:t] + vs[t + 1:]) != k - 1 for t in range(k)):
                continue
            ker = integer_kernel(transpose(vs, m), k) if m else ((1,) * k,)
            if len(ker) != 1:
                continue
            lam = ker[0]
            if any(x == 0 for x in lam):
                continue
            pos = sum(1 << C[t] for t in range(k) if lam[t] > 0)
            neg = sum(1 << C[t] for t in range(k) if lam[t] < 0)
            out.add((pos, neg))
            out.add((neg, pos))
    return tuple(sorted(out))


def _mask(cell: Iterable[int]) -> int:
    return sum(1 << i for i in cell)


def intersect_properly(vectors: tuple[Vector, ...], s: Iterable[int], t: Iterable[int]) -> bool:
    """``cone(s) cap cone(t) = cone(s cap t)``: no circuit has Z+ in s and Z- in t."""
    ms, mt = _mask(s), _mask(t)
    for pos, neg in circuits(vectors):
        if pos & ms == pos and neg & mt == neg:
            return False
    return True


# ---------------------------------------------------------------------------
# enumeration


def _generic_interior_point(vectors, normals, seed=0):
    rng = random.Random(seed)
    n = len(vectors)
    m = len(vectors[0])
    nz = [h for h in normals if any(h)]
    for _ in range(1000):
        w = [rng.randint(1, 10 * n) for _ in range(n)]
        p = tuple(sum(w[j] * vectors[j][t] for j in range(n)) for t in range(m))
        if all(dot(h, p) != 0 for h in nz):
            return p
    raise RuntimeError("no generic point found")


def all_triangulations(config: Configuration, uses_all_vectors: bool = False,
                       max_n: int = MAX_TRIANGULATION_N) -> list[Triangulation]:
    """Every triangulation of a full-rank configuration.

    Depth-first search: fix the cell containing a generic interior point, then
    repeatedly pick the first interior facet without a neighbour and branch
    over the cells that could sit across it. Each triangulation is reached
    along exactly one path.
    """
    vecs = config.vectors
    n, m = config.n, config.m
    if n > max_n:
        raise TooLarge(f"triangulation enumeration is limited to {max_n} vectors")
    if rank(vecs) < m:
        raise NotATriangulation("triangulations need a full-rank configuration")
    if m == 0:
        return [_triangulation(config, [()])]
    cand = [S for S in itertools.combinations(range(n), m) if det([vecs[i] for i in S]) != 0]
    Fs = list(itertools.combinations(range(n), m - 1))
    H = _kernels.candidate_normals(np.array(vecs, dtype=object), np.zeros((0, m), dtype=object), Fs)
    facets_normal = {F: tuple(int(x) for x in h) for F, h in zip(Fs, H.tolist())}
    normals = list(facets_normal.values())
    side = {F: [dot(h, v) for v in vecs] for F, h in facets_normal.items()}
    boundary = {F: (all(x >= 0 for x in s) or all(x <= 0 for x in s)) for F, s in side.items()}
    p = _generic_interior_point(vecs, normals)
    circ = circuits(vecs)
    masks = {S: _mask(S) for S in cand}
    compat_cache = {}

    def compatible(S, T):
        key = (S, T) if S < T else (T, S)
        if key not in compat_cache:
            a, b = masks[S], masks[T]
            ok = True
            for pos, neg in circ:
                if pos & a == pos and neg & b == neg:
                    ok = False
                    break
            compat_cache[key] = ok
        return compat_cache[key]

    def contains_p(S):
        for j in S:
            F = tuple(x for x in S if x != j)
            s = side[F]
            if s[j] * dot(facets_normal[F], p) <= 0:
                return False
        return True

    results = []

    def open_facet(chosen):
        present = set(chosen)
        for S in chosen:
            for j in S:
                F = tuple(x for x in S if x != j)
                if boundary[F]:
                    continue
                sj = side[F][j]
                matched = any(T != S and set(F) <= set(T) and
                              side[F][next(x for x in T if x not in F)] * sj < 0 for T in present)
                if not matched:
                    return F, j
        return None

    def extend(chosen):
        nxt = open_facet(chosen)
        if nxt is None:
            results.append(_triangulation(config, chosen))
            return
        F, j = nxt
        sj = side[F][j]
        for k in range(n):
            if k in F or side[F][k] * sj >= 0:
                continue
            T = tuple(sorted(F + (k,)))
            if T not in masks or T in chosen:
                continue
            if all(compatible(T, S) for S in chosen):
                extend(chosen + [T])

    for S in cand:
        if contains_p(S):
            extend([S])
    if uses_all_vectors:
        results = [T for T in results if T.used() == set(range(n))]
    return sorted(results, key=lambda T: T.maximalCells)


# ---------------------------------------------------------------------------
# regularity


def _adjugate(M):
    m = len(M)
    if m == 1:
        return [[1]]
    adj = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(m):
            minor = [r[:j] + r[j + 1:] for k, r in enumerate(M) if k != i]
            adj[j][i] = (-1) ** (i + j) * det(minor)
    return adj


def regularity_system(T: Subdivision) -> list[list[int]]:
    """Rows ``r`` such that ``T`` is induced by ``c`` iff ``r . c > 0`` for every row."""
    vecs = T.config.vectors
    n, m = T.config.n, T.config.m
    rows = []
    for cell in T.maximalCells:
        basis = list(cell[:m]) if len(cell) == m else _independent_subset(vecs, cell, m)
        M = [list(vecs[i]) for i in basis]
        d = det(M)
        adj = _adjugate(M)
        if d < 0:
            d, adj = -d, [[-x for x in r] for r in adj]
        # x_sigma = adj * c_basis / d ; v_j . x_sigma compared with c_j
        for j in range(n):
            coeff = [0] * n
            w = [sum(vecs[j][t] * adj[t][k] for t in range(m)) for k in range(m)]
            for k, i in enumerate(basis):
                coeff[i] -= w[k]
            coeff[j] += d
            if j in cell:
                if any(coeff):
                    rows.append(("eq", coeff))
            else:
                rows.append(("gt", coeff))
    return rows


def _independent_subset(vecs, cell, m):
    chosen = []
    for i in cell:
        if rank([vecs[k] for k in chosen + [i]]) == len(chosen) + 1:
            chosen.append(i)
        if len(chosen) == m:
            break
    return chosen


def is_regular(T: Subdivision) -> tuple[bool, tuple[int, ...] | None]:
    """Exact feasibility of the strict system; returns an integer lifting vector when regular."""
    rows = regularity_system(T)
    gt = [r for k, r in rows if k == "gt"]
    eq = [r for k, r in rows if k == "eq"]
    n = T.config.n
    if not gt:
        return True, tuple([0] * n)
    x = strictly_feasible(gt, eq)
    if x is None:
        return False, None
    c = clear_denominators(list(x))
    return True, tuple(c)


# ---------------------------------------------------------------------------
# refinement


def _pulling(vecs, W: tuple[int, ...], m: int):
    from .polyhedra import cone_from

    if rank([vecs[i] for i in W]) == len(W):
        return [W]
    C = cone_from([vecs[i] for i in W], m)
    i0 = W[0]
    out = []
    for h in C.facets:
        if dot(h, vecs[i0]) != 0:
            F = tuple(j for j in W if dot(h, vecs[j]) == 0)
            for s in _pulling(vecs, F, m):
                out.append((i0,) + s)
    return out


def _ray_indices(vecs, cell, m):
    from .polyhedra import cone_from

    C = cone_from([vecs[i] for i in cell], m)
    rays = set(C.rays)
    from .lattice import primitive

    seen = set()
    out = []
    for i in sorted(cell):
        p = primitive(vecs[i])
        if p in rays and p not in seen:
            seen.add(p)
            out.append(i)
    return out


def _stellar(vecs, cells: set, j: int, m: int) -> set:
    out = set()
    v = vecs[j]
    for S in cells:
        M = [vecs[i] for i in S]
        lam = _coords(M, v)
        if lam is None or any(x < 0 for x in lam):
            out.add(S)
            continue
        G = [S[k] for k in range(len(S)) if lam[k] > 0]
        for g in G:
            out.add(tuple(sorted(set(S) - {g} | {j})))
    return out


def _coords(M, v):
    from .lattice import solve

    return solve(transpose(M), v)


def refine_to_triangulation(S: Subdivision) -> Triangulation:
    """Pull the rays of every cell in index order, then insert the remaining vectors stellarly."""
    vecs = S.config.vectors
    m = S.config.m
    if S.is_triangulation:
        return Triangulation(S.config, S.cells, S.liftingC)
    cells = set()
    extra = set()
    for cell in S.maximalCells:
        rays = _ray_indices(vecs, cell, m)
        extra.update(i for i in cell if i not in rays)
        for s in _pulling(vecs, tuple(rays), m):
            cells.add(tuple(sorted(s)))
    for j in sorted(extra):
        cells = _stellar(vecs, cells, j, m)
    T = _triangulation(S.config, cells)
    ok, c = is_regular(T)
    return Triangulation(S.config, T.cells, c if ok else None)
