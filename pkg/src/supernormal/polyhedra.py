"""Rational cones, the polyhedra P_c and Q_c, lattice points and Hilbert bases.

Everything is exact. Cones are computed by enumerating candidate facet
hyperplanes through (d-1)-subsets of generators, which is the brute-force
double description and is fine for ambient dimension at most 4 or 5.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import floor, ceil
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from ._lp import linprog
from .errors import (DimensionTooLarge, EmptyPolyhedron, NotPointed, Unbounded)
from .lattice import (Configuration, Vector, det, dot, identity, integer_kernel, primitive,
                      rank, row_lattice_hnf, smith_normal_form, solve, coordinates, transpose,
                      hermite_normal_form, clear_denominators)

MAX_CONE_DIM = 4


@dataclass(frozen=True)
class Cone:
    """A rational polyhedral cone ``{x : E x = 0, F x >= 0}``.

    ``rays`` are primitive extreme rays (modulo the lineality space when the
    cone is not pointed); ``facets`` are primitive inner normals defined up to
    the span, represented inside the span itself.
    """

    dim: int
    generators: tuple[Vector, ...]
    rays: tuple[Vector, ...]
    facets: tuple[Vector, ...]
    equations: tuple[Vector, ...]
    lineality: tuple[Vector, ...]

    @property
    def span_dim(self) -> int:
        return self.dim - len(self.equations)

    @property
    def is_pointed(self) -> bool:
        return not self.lineality

    @property
    def is_full_dimensional(self) -> bool:
        return not self.equations

    @property
    def key(self) -> tuple:
        return (self.dim, self.facets, self.equations)

    def contains(self, v: Sequence) -> bool:
        return (all(dot(e, v) == 0 for e in self.equations)
                and all(dot(h, v) >= 0 for h in self.facets))

    def contains_relint(self, v: Sequence) -> bool:
        return (all(dot(e, v) == 0 for e in self.equations)
                and all(dot(h, v) > 0 for h in self.facets))

    def grading(self) -> Vector:
        """Integer functional, zero on the lineality space and positive on the rest of the cone."""
        if not self.facets:
            return tuple(0 for _ in range(self.dim))
        return tuple(sum(h[t] for h in self.facets) for t in range(self.dim))


def _normalize(vectors: Iterable[Sequence[int]], dim: int | None) -> tuple[int, tuple[Vector, ...]]:
    vecs = tuple(tuple(int(x) for x in v) for v in vectors)
    if dim is None:
        if not vecs:
            raise ValueError("dimension unknown for an empty generator list")
        dim = len(vecs[0])
    return dim, vecs


def cone_from(vectors: Iterable[Sequence[int]], dim: int | None = None,
              max_dim: int = MAX_CONE_DIM) -> Cone:
    """The cone spanned by ``vectors`` with canonical rays and facets."""
    dim, vecs = _normalize(vectors, dim)
    if dim > max_dim:
        raise DimensionTooLarge(f"cones are limited to dimension {max_dim} (got {dim})")
    return _cone_cached(dim, vecs)


@lru_cache(maxsize=200_000)
def _cone_cached(dim: int, vecs: tuple[Vector, ...]) -> Cone:
    prim = sorted({primitive(v) for v in vecs if any(v)})
    if not prim:
        eye = identity(dim)
        return Cone(dim, vecs, (), (), eye, ())
    eqs = integer_kernel(prim, dim)
    d = dim - len(eqs)
    G = np.array(prim, dtype=object)
    combos = list(itertools.combinations(range(len(prim)), d - 1))
    normals = _kernels.candidate_normals(G, np.array(eqs, dtype=object).reshape(-1, dim), combos)
    facets = _valid_facets(G, normals)
    facets = tuple(sorted(facets))
    lin = integer_kernel(list(facets) + list(eqs), dim) if facets else integer_kernel(eqs, dim)
    l = len(lin)
    rays = {}
    for g in prim:
        act = [h for h in facets if dot(h, g) == 0]
        if len(act) == len(facets):
            continue  # g lies in the lineality space
        if rank(list(act) + list(eqs)) == dim - l - 1:
            sig = tuple(act)
            if sig not in rays:
                rays[sig] = g
    return Cone(dim, vecs, tuple(sorted(rays.values())), facets, tuple(eqs), tuple(lin))


def _valid_facets(G, normals) -> set:
    """Primitive, sign-corrected normals that are valid on every generator."""
    if not len(normals):
        return set()
    bound = max(_kernels._maxabs(G), 1) * max(_kernels._maxabs(normals), 1) * G.shape[1]
    if bound >= 2 ** 62:
        out = set()
        for h in normals.tolist():
            h = primitive(h)
            if not any(h):
                continue
            vals = [dot(g, h) for g in G.tolist()]
            if all(v >= 0 for v in vals):
                out.add(h)
            elif all(v <= 0 for v in vals):
                out.add(tuple(-x for x in h))
        return out
    N = normals.astype(np.int64)
    g = np.gcd.reduce(np.abs(N), axis=1)
    keep = g > 0
    N = N[keep] // g[keep, None]
    # fix the sign by the first nonzero entry so that duplicates collapse
    first = np.argmax(N != 0, axis=1)
    N = N * np.sign(N[np.arange(len(N)), first])[:, None]
    N = np.unique(N, axis=0)
    Gi = G.astype(np.int64)
    out = set()
    step = max(1, 2_000_000 // max(len(Gi), 1))
    for s in range(0, len(N), step):
        chunk = N[s:s + step]
        vals = Gi @ chunk.T
        for h in chunk[(vals >= 0).all(axis=0)].tolist():
            out.add(tuple(h))
        for h in chunk[(vals <= 0).all(axis=0)].tolist():
            out.add(tuple(-x for x in h))
    return out


def cone_contains(C: Cone, v: Sequence[int]) -> bool:
    return C.contains(v)


def cone_equal(C1: Cone, C2: Cone) -> bool:
    return C1.key == C2.key


def cone_from_inequalities(H: Sequence[Sequence[int]], dim: int) -> Cone:
    """The cone ``{w : h . w >= 0 for h in H}``.

    Computed as the dual of ``cone(H)``: its generators are the facet normals
    of ``cone(H)`` together with both signs of the orthogonal complement.
    """
    C = cone_from(H, dim) if H else cone_from([], dim)
    gens = list(C.facets)
    for e in C.equations:
        gens.append(tuple(e))
        gens.append(tuple(-x for x in e))
    return cone_from(gens, dim)


def is_pointed(B: Configuration | Sequence[Sequence[int]]) -> bool:
    """Whether some ``u`` has ``b . u > 0`` for every vector ``b``."""
    vecs = list(B)
    if any(not any(v) for v in vecs):
        return False
    return cone_from(vecs).is_pointed


# ---------------------------------------------------------------------------
# lineality quotient


@dataclass(frozen=True)
class Quotient:
    """Coordinates on ``Z^m / (L cap Z^m)`` for a saturated sublattice ``L``."""

    V: tuple[tuple[int, ...], ...]
    l: int

    def __call__(self, x: Sequence[int]) -> Vector:
        y = tuple(sum(x[i] * self.V[i][j] for i in range(len(x))) for j in range(len(self.V)))
        return y[self.l:]


def lineality_quotient(C: Cone) -> Quotient:
    if not C.lineality:
        return Quotient(identity(C.dim), 0)
    _, _, V = smith_normal_form(C.lineality)
    return Quotient(V, len(C.lineality))


# ---------------------------------------------------------------------------
# Hilbert bases and monoid membership


@dataclass(frozen=True)
class HilbertBasis:
    cone: Cone
    elements: tuple[Vector, ...]


def pulling_triangulation(rays: Sequence[Vector]) -> list[list[Vector]]:
    """Pulling triangulation of a pointed cone, pulling the rays in the given order."""
    rays = list(rays)
    C = cone_from(rays)
    if len(rays) == C.span_dim:
        return [rays]
    r0 = rays[0]
    out = []
    for h in C.facets:
        if dot(h, r0) != 0:
            face = [r for r in rays if dot(h, r) == 0]
            face_rays = list(cone_from(face, C.dim).rays)
            face_rays.sort(key=rays.index)
            for s in pulling_triangulation(face_rays):
                out.append([r0] + s)
    return out


def _inverse_unimodular(V):
    n = len(V)
    cols = []
    for j in range(n):
        e = [int(i == j) for i in range(n)]
        x = solve(V, e)
        cols.append([int(t) for t in x])
    return transpose(cols)


def parallelepiped_points(simplex: Sequence[Vector]) -> list[Vector]:
    """Lattice points ``sum lambda_i g_i`` with ``0 <= lambda_i < 1`` (including 0)."""
    G = [tuple(g) for g in simplex]
    dim = len(G[0])
    eqs = integer_kernel(G, dim)
    W = integer_kernel(eqs, dim) if eqs else identity(dim)  # basis of span cap Z^m
    T = []
    for g in G:
        lam = coordinates(W, g)
        T.append([int(x) for x in lam])
    S, U, V = smith_normal_form(T)
    Vinv = _inverse_unimodular(V)
    diag = [S[i][i] for i in range(len(G))]
    pts = []
    for k in itertools.product(*[range(s) for s in diag]):
        y = [sum(k[i] * Vinv[i][j] for i in range(len(k))) for j in range(len(k))]
        p = [sum(y[i] * W[i][t] for i in range(len(y))) for t in range(dim)]
        lam = coordinates(G, p)
        q = tuple(sum((lam[i] - floor(lam[i])) * G[i][t] for i in range(len(G))) for t in range(dim))
        pts.append(tuple(int(x) for x in q))
    return sorted(set(pts))


def hilbert_basis(C: Cone) -> HilbertBasis:
    """Minimal generating set of the monoid ``C cap Z^m`` of a pointed cone."""
    if not C.is_pointed:
        raise NotPointed("Hilbert bases are defined for pointed cones")
    if not C.rays:
        return HilbertBasis(C, ())
    cands = set(C.rays)
    for simplex in pulling_triangulation(C.rays):
        cands.update(p for p in parallelepiped_points(simplex) if any(p))
    u = C.grading()
    order = sorted(cands, key=lambda x: (dot(u, x), x))
    elements = []
    for x in order:
        if not any(y != x and dot(u, y) < dot(u, x) and C.contains(tuple(a - b for a, b in zip(x, y)))
                   for y in order):
            elements.append(x)
    return HilbertBasis(C, tuple(elements))


def _positive_relation(gens: Sequence[Vector]) -> list[int] | None:
    """Integer relation ``sum p_g g = 0`` with every ``p_g > 0``; gens must span a linear space."""
    k = len(gens)
    total = [0] * k
    for j, g in enumerate(gens):
        A_eq = [[gens[i][t] for i in range(k)] for t in range(len(g))]
        b_eq = [-x for x in g]
        lam = linprog([0] * k, A_eq=A_eq, b_eq=b_eq, free=False)
        if lam is None:
            return None
        lam = list(lam)
        lam[j] += 1
        ints = clear_denominators(lam)
        total = [a + b for a, b in zip(total, ints)]
    return total


def _integer_solution(gens: Sequence[Vector], r: Sequence[int]) -> list[int] | None:
    """Integers ``z`` with ``sum z_g g = r`` or None."""
    if not gens:
        return [] if not any(r) else None
    H, U = hermite_normal_form(gens)
    y = [0] * len(gens)
    res = list(r)
    for i, row in enumerate(H):
        piv = next((j for j, x in enumerate(row) if x), None)
        if piv is None:
            break
        if res[piv] % row[piv]:
            return None
        q = res[piv] // row[piv]
        y[i] = q
        res = [a - q * b for a, b in zip(res, row)]
    if any(res):
        return None
    return [sum(y[i] * U[i][j] for i in range(len(gens))) for j in range(len(gens))]


def monoid_membership(v: Sequence[int], generators: Sequence[Sequence[int]]) -> tuple[bool, list[int] | None]:
    """Decide ``v in N * generators``; returns ``(True, multipliers)`` or ``(False, None)``.

    Multipliers are bounded through a functional that is positive on the
    generators outside the lineality space of their cone; whatever remains
    must be an integer combination of the lineality generators, which form a
    group.
    """
    v = tuple(int(x) for x in v)
    gens = [tuple(int(x) for x in g) for g in generators]
    dim = len(v)
    if not any(v):
        return True, [0] * len(gens)
    distinct = sorted({g for g in gens if any(g)})
    if not distinct:
        return False, None
    C = cone_from(distinct, dim)
    if not C.contains(v):
        return False, None
    u = C.grading()
    lin_g = [g for g in distinct if all(dot(h, g) == 0 for h in C.facets)]
    pos_g = sorted((g for g in distinct if g not in lin_g), key=lambda g: -dot(u, g))
    weights = [dot(u, g) for g in pos_g]
    lin_lattice = row_lattice_hnf(lin_g) if lin_g else ()
    dead = set()

    def residual_ok(r):
        if not lin_g:
            return not any(r)
        return row_lattice_hnf(list(lin_lattice) + [r]) == lin_lattice

    def search(i, r, budget):
        if budget == 0:
            return [] if residual_ok(r) else None
        if i == len(pos_g):
            return None
        key = (i, r)
        if key in dead:
            return None
        g, w = pos_g[i], weights[i]
        for k in range(budget // w, -1, -1):
            r2 = tuple(a - k * b for a, b in zip(r, g))
            if k and not C.contains(r2):
                continue
            sub = search(i + 1, r2, budget - k * w)
            if sub is not None:
                return [k] + sub
        dead.add(key)
        return None

    found = search(0, v, dot(u, v))
    if found is None:
        return False, None
    found = found + [0] * (len(pos_g) - len(found))
    mult = {g: k for g, k in zip(pos_g, found)}
    r = tuple(a - sum(mult[g] * g[t] for g in pos_g) for t, a in enumerate(v))
    if lin_g:
        z = _integer_solution(lin_g, r)
        if any(x < 0 for x in z):
            p = _positive_relation(lin_g)
            k = max(-(x // q) for x, q in zip(z, p) if x < 0)
            z = [a + k * q for a, q in zip(z, p)]
        mult.update({g: k for g, k in zip(lin_g, z)})
    out, used = [], set()
    for g in gens:
        if g in mult and g not in used:
            out.append(mult[g])
            used.add(g)
        else:
            out.append(0)
    return True, out


def is_normal_set(vectors: Sequence[Sequence[int]], dim: int | None = None) -> tuple[bool, Vector | None]:
    """Whether the vectors generate the monoid of lattice points of their cone.

    Returns ``(verdict, witness)`` where the witness is a lattice point of the
    cone outside the generated monoid (for the non-pointed case it is a lift
    of the failing quotient element or a lattice vector of the lineality
    space).
    """
    dim, vecs = _normalize(vectors, dim)
    distinct = sorted({v for v in vecs if any(v)})
    C = cone_from(distinct, dim)
    if C.is_pointed:
        for h in hilbert_basis(C).elements:
            if not monoid_membership(h, distinct)[0]:
                return False, h
        return True, None
    lin_g = [g for g in distinct if all(dot(h, g) == 0 for h in C.facets)]
    have = row_lattice_hnf(lin_g)
    if have != row_lattice_hnf(C.lineality):
        for e in C.lineality:
            if row_lattice_hnf(list(have) + [e]) != have:
                return False, tuple(e)
    q = lineality_quotient(C)
    pos = [g for g in distinct if g not in lin_g]
    proj = [q(g) for g in pos]
    Cq = cone_from(proj, dim - q.l)
    for h in hilbert_basis(Cq).elements:
        if not monoid_membership(h, proj)[0]:
            return False, _lift(q, h)
    return True, None


def _lift(q: Quotient, y: Sequence[int]) -> Vector:
    full = [0] * q.l + list(y)
    Vinv = _inverse_unimodular(q.V)
    return tuple(sum(full[i] * Vinv[i][j] for i in range(len(full))) for j in range(len(full)))


# ---------------------------------------------------------------------------
# the polyhedra P_c


@lru_cache(maxsize=512)
def _basis_data(vectors: tuple[Vector, ...]):
    """Adjugate data for every basis of a full-rank configuration."""
    n, m = len(vectors), len(vectors[0])
    subsets, adjs, dets = [], [], []
    for S in itertools.combinations(range(n), m):
        M = [vectors[i] for i in S]
        d = det(M)
        if d == 0:
            continue
        # x = M^{-1} c_S = adj(M) c_S / d
        adj = [[0] * m for _ in range(m)]
        for i in range(m):
            for j in range(m):
                minor = [r[:j] + r[j + 1:] for k, r in enumerate(M) if k != i]
                adj[j][i] = (-1) ** (i + j) * det(minor)
        if d < 0:
            d = -d
            adj = [[-x for x in r] for r in adj]
        subsets.append(S)
        adjs.append(adj)
        dets.append(d)
    return subsets, np.array(adjs, dtype=object).reshape(-1, m, m), np.array(dets, dtype=object)


@lru_cache(maxsize=512)
def _recession_generators(vectors: tuple[Vector, ...]) -> tuple[Vector, ...]:
    """Integral generators of ``{x : b . x <= 0 for all b}``."""
    m = len(vectors[0])
    C = cone_from(vectors, m, max_dim=max(MAX_CONE_DIM, m))
    gens = [tuple(-x for x in h) for h in C.facets]
    for e in C.equations:
        gens.append(tuple(e))
        gens.append(tuple(-x for x in e))
    return tuple(gens)


@dataclass(frozen=True)
class PolyhedronPc:
    """``P_c = {x : b_i . x <= c_i}``.

    ``vertices`` holds one representative per minimal face (the actual
    vertices when the configuration has full rank) and ``active`` the index
    set of inequalities tight on that face.
    """

    config: Configuration
    c: tuple[int, ...]
    vertices: tuple[tuple[Fraction, ...], ...]
    active: tuple[frozenset, ...]
    recession: tuple[Vector, ...] = field(repr=False)

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    @property
    def is_bounded(self) -> bool:
        return not self.recession

    @property
    def is_integral(self) -> bool:
        return all(x.denominator == 1 for v in self.vertices for x in v)

    def contains(self, x: Sequence) -> bool:
        return all(dot(b, x) <= ci for b, ci in zip(self.config.vectors, self.c))

    def relevant_box(self) -> tuple[list[int], list[int]]:
        """Box containing every lattice point that can carry an extreme value.

        It is the vertex bounding box plus the Minkowski sum of the segments
        ``[0, r]`` over the integral recession generators ``r``; every lattice
        point of ``P_c`` is such a point plus a nonnegative integer
        combination of recession generators.
        """
        m = self.config.m
        lo = [min(floor(v[t]) for v in self.vertices) for t in range(m)]
        hi = [max(ceil(v[t]) for v in self.vertices) for t in range(m)]
        for r in self.recession:
            for t in range(m):
                lo[t] += min(0, r[t])
                hi[t] += max(0, r[t])
        return lo, hi


def polyhedron(B: Configuration, c: Sequence[int]) -> PolyhedronPc:
    c = tuple(int(x) for x in c)
    if len(c) != B.n:
        raise ValueError("c must have one entry per vector")
    vecs = B.vectors
    m = B.m
    rec = _recession_generators(vecs)
    if rank(vecs) == m:
        subsets, adjs, dets = _basis_data(vecs)
        verts, acts = _vertices_full_rank(vecs, c, subsets, adjs, dets)
    else:
        verts, acts = _vertices_general(vecs, c)
    return PolyhedronPc(B, c, verts, acts, rec)


def _vertices_full_rank(vecs, c, subsets, adjs, dets):
    if not subsets:
        return (), ()
    m = len(vecs[0])
    bound = _kernels._maxabs(adjs) * max(_kernels._maxabs(c), 1) * m * max(_kernels._maxabs(vecs), 1) * m
    bound *= max(_kernels._maxabs(dets), 1)
    dtype = np.int64 if bound < 2 ** 60 else object
    cS = np.array([[c[i] for i in S] for S in subsets], dtype=dtype)
    XN = np.einsum("kij,kj->ki", adjs.astype(dtype), cS) if dtype is not object else np.array(
        [adjs[k].dot(cS[k]) for k in range(len(subsets))], dtype=object)
    Bm = np.array(vecs, dtype=dtype)
    lhs = XN @ Bm.T
    rhs = dets.astype(dtype)[:, None] * np.array(c, dtype=dtype)[None, :]
    feas = np.all(lhs <= rhs, axis=1)
    seen = {}
    for k in np.nonzero(feas)[0]:
        d = int(dets[k])
        x = tuple(Fraction(int(a), d) for a in XN[k])
        if x not in seen:
            seen[x] = frozenset(int(i) for i in np.nonzero(lhs[k] == rhs[k])[0])
    order = sorted(seen)
    return tuple(order), tuple(seen[x] for x in order)


def _vertices_general(vecs, c):
    m = len(vecs[0])
    r = rank(vecs)
    perp = integer_kernel(vecs, m)
    seen = {}
    for S in itertools.combinations(range(len(vecs)), r):
        rows = [vecs[i] for i in S] + list(perp)
        if rank(rows) < m:
            continue
        x = solve(rows, [c[i] for i in S] + [0] * len(perp))
        vals = [dot(b, x) for b in vecs]
        if all(v <= ci for v, ci in zip(vals, c)) and x not in seen:
            seen[x] = frozenset(i for i, (v, ci) in enumerate(zip(vals, c)) if v == ci)
    order = sorted(seen)
    return tuple(order), tuple(seen[x] for x in order)


def _points_in_box(P: PolyhedronPc, lo, hi) -> list[Vector]:
    pts = _kernels.box_points(lo, hi, P.config.vectors, P.c)
    return [tuple(int(x) for x in p) for p in pts.tolist()]


def lattice_points(P: PolyhedronPc, box: tuple[Sequence[int], Sequence[int]] | None = None) -> list[Vector]:
    """Lex-sorted lattice points of ``P`` (inside ``box`` when one is given)."""
    if box is None:
        if P.is_empty:
            return []
        if not P.is_bounded:
            raise Unbounded("P_c is unbounded; pass a bounding box")
        box = P.relevant_box()
    return _points_in_box(P, *box)


def relevant_lattice_points(P: PolyhedronPc) -> list[Vector]:
    """Lattice points of ``P`` inside :meth:`PolyhedronPc.relevant_box`.

    Every lattice point of ``P`` equals one of these plus a nonnegative
    integer combination of ``P.recession``.
    """
    if P.is_empty:
        return []
    return _points_in_box(P, *P.relevant_box())


def normal_fan(P: PolyhedronPc):
    """Regular subdivision of the configuration given by the active sets of minimal faces."""
    from .triangulations import Subdivision

    if P.is_empty:
        raise EmptyPolyhedron("P_c has no points")
    cells = frozenset(P.active)
    return Subdivision(P.config, cells, P.c)


def _hull_candidates(pts: list[Vector], rec: Sequence[Vector]) -> list[Vector]:
    """Drop lattice points that are visibly not vertices.

    A point is not a vertex if it is the midpoint of two other lattice points
    of the polyhedron, or if subtracting a recession generator stays inside.
    """
    pset = set(pts)
    drop = set()
    for z in pts:
        if any(tuple(a - b for a, b in zip(z, r)) in pset for r in rec):
            drop.add(z)
    # cheap pass first: z is a midpoint of z - d and z + d for small d
    m = len(pts[0]) if pts else 0
    dirs = [d for d in itertools.product((-1, 0, 1), repeat=m) if d > tuple([0] * m)] if m <= 4 else []
    for z in pts:
        for d in dirs:
            if (tuple(a + b for a, b in zip(z, d)) in pset and tuple(a - b for a, b in zip(z, d)) in pset):
                drop.add(z)
                break
    pts = [z for z in pts if z not in drop]
    arr = np.array(pts, dtype=np.int64).reshape(-1, m)
    for i in range(len(pts)):
        s = arr[i] + arr[i + 1:]
        even = (s % 2 == 0).all(axis=1)
        for mid in (s[even] // 2).tolist():
            drop.add(tuple(mid))
    return [z for z in pts if z not in drop]


@dataclass(frozen=True)
class IntegerHullQc:
    source: PolyhedronPc
    hullVertices: tuple[Vector, ...]


def integer_hull(P: PolyhedronPc) -> IntegerHullQc:
    """Vertices of ``Q_c``, the convex hull of the lattice points of ``P_c``."""
    if P.is_empty:
        return IntegerHullQc(P, ())
    m = P.config.m
    if rank(P.config.vectors) < m:
        raise Unbounded("Q_c has no vertices when the configuration is not full rank")
    pts = relevant_lattice_points(P)
    if not pts:
        return IntegerHullQc(P, ())
    if P.is_bounded and len(pts) == 1:
        return IntegerHullQc(P, (pts[0],))
    pts = _hull_candidates(pts, P.recession)
    if len(pts) == 1 and P.is_bounded:
        return IntegerHullQc(P, (pts[0],))
    lifted = [(1,) + p for p in pts] + [(0,) + tuple(r) for r in P.recession]
    H = cone_from(lifted, m + 1, max_dim=MAX_CONE_DIM + 1)
    pset = set(pts)
    verts = []
    for r in H.rays:
        if r[0] != 0:
            v = tuple(Fraction(x, r[0]) for x in r[1:])
            if all(x.denominator == 1 for x in v):
                v = tuple(int(x) for x in v)
                if v in pset:
                    verts.append(v)
    return IntegerHullQc(P, tuple(sorted(verts)))
