"""Normality, supernormality, tightness and total dual integrality."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionTooLarge, EmptyPolyhedron, NoLatticePoint, TooLarge
from .lattice import Configuration, Vector, det, dot, primitive, rank, sublattice_index
from .polyhedra import (cone_from, is_normal_set, monoid_membership, parallelepiped_points, polyhedron,
                        relevant_lattice_points, MAX_CONE_DIM)

# subset enumeration guards for the definition method, by dimension
DEFINITION_GUARD = {1: 64, 2: 20, 3: 12, 4: 10}


@dataclass(frozen=True)
class SupernormalityReport:
    verdict: bool
    method: str
    subset: tuple[Vector, ...] | None = None
    point: Vector | None = None

    @property
    def witness(self):
        if self.subset is None:
            return None
        return self.subset, self.point

    def __bool__(self):
        return self.verdict


@dataclass(frozen=True)
class TightnessReport:
    c: tuple[int, ...]
    tight: bool
    slackIndices: tuple[int, ...]
    tightenedC: tuple[int, ...] | None


def _as_config(B) -> Configuration:
    if isinstance(B, Configuration):
        return B
    return Configuration(tuple(tuple(v) for v in B))


@lru_cache(maxsize=100_000)
def _normal_cached(vecs: tuple[Vector, ...], dim: int):
    return is_normal_set(vecs, dim)


def normal_witness(vectors: Iterable[Sequence[int]], dim: int | None = None) -> tuple[bool, Vector | None]:
    vecs = tuple(sorted({tuple(int(x) for x in v) for v in vectors}))
    if dim is None:
        dim = len(vecs[0])
    return _normal_cached(vecs, dim)


def is_normal(B) -> bool:
    """Every lattice point of cone(B) is a nonnegative integer combination of B."""
    B = _as_config(B)
    if B.m > MAX_CONE_DIM:
        raise DimensionTooLarge(f"normality is limited to dimension {MAX_CONE_DIM}")
    return normal_witness(B.vectors, B.m)[0]


# ---------------------------------------------------------------------------
# supernormality


def _shortest_on_rays(vectors: Sequence[Vector]) -> list[int]:
    """Indices of the shortest vector on every ray spanned by the configuration."""
    best = {}
    for i, v in enumerate(vectors):
        p = primitive(v)
        k = max(abs(x) for x in v) // max(abs(x) for x in p)
        if p not in best or k < best[p][0]:
            best[p] = (k, i)
    return sorted(i for _, i in best.values())


def _in_simplicial_cone(sigma: Sequence[Vector], v: Vector) -> bool:
    C = cone_from(sigma, len(v))
    return C.contains(v)


def _simplex_method(B: Configuration) -> SupernormalityReport:
    """Every independent subset of shortest ray vectors whose cone holds no
    other such vector must be a lattice basis of its span."""
    vecs = B.vectors
    S = _shortest_on_rays(vecs)
    m = B.m
    for k in range(1, m + 1):
        for sig in itertools.combinations(S, k):
            sv = [vecs[i] for i in sig]
            if rank(sv) < k:
                continue
            others = [vecs[j] for j in S if j not in sig]
            if k == m:
                inside = _batch_in_full_cone(sv, others)
            else:
                C = cone_from(sv, m)
                inside = any(C.contains(v) for v in others)
            if inside:
                continue
            if sublattice_index(sv) == 1:
                continue
            pts = [p for p in parallelepiped_points(sv) if any(p)]
            for p in [primitive(v) for v in sv] + pts:
                gens = [v for v in vecs if _in_simplicial_cone(sv, v)]
                if not monoid_membership(p, gens)[0]:
                    return SupernormalityReport(False, "simplex", tuple(sv), tuple(p))
    return SupernormalityReport(True, "simplex")


def _batch_in_full_cone(sigma: Sequence[Vector], others: Sequence[Vector]) -> bool:
    """Whether any of ``others`` lies in the full-dimensional simplicial cone of ``sigma``."""
    if not others:
        return False
    m = len(sigma)
    d = det(sigma)
    # Cramer: lambda_i * det(sigma) is the determinant with row i replaced, a
    # linear form in v whose coefficients are the cofactors of row i
    cof = np.zeros((m, m), dtype=object)
    for i in range(m):
        for j in range(m):
            minor = [r[:j] + r[j + 1:] for k, r in enumerate(sigma) if k != i]
            cof[i, j] = (-1) ** (i + j) * det(minor) if m > 1 else 1
    lam = np.array(others, dtype=object).dot(cof.T) * (1 if d > 0 else -1)
    return bool((lam >= 0).all(axis=1).any())


def _closures(B: Configuration, limit: int = 200_000):
    """All sets of the form ``B cap cone(B')``, as sorted index tuples."""
    vecs = B.vectors

    def close(idx):
        C = cone_from([vecs[i] for i in idx], B.m)
        return tuple(i for i, v in enumerate(vecs) if C.contains(v))

    seen = set()
    frontier = [close((i,)) for i in range(B.n)]
    seen.update(frontier)
    while frontier:
        nxt = []
        for S in frontier:
            for j in range(B.n):
                if j in S:
                    continue
                T = close(tuple(S) + (j,))
                if T not in seen:
                    seen.add(T)
                    nxt.append(T)
                    if len(seen) > limit:
                        raise TooLarge("too many distinct cones for the definition method")
        frontier = nxt
    return sorted(seen, key=lambda s: (len(s), s))


def _definition_method(B: Configuration) -> SupernormalityReport:
    for S in _closures(B):
        vecs = [B.vectors[i] for i in S]
        ok, w = normal_witness(vecs, B.m)
        if not ok:
            return SupernormalityReport(False, "definition", tuple(vecs), w)
    return SupernormalityReport(True, "definition")


def _triangulation_method(B: Configuration) -> SupernormalityReport:
    from .triangulations import all_triangulations, is_unimodular

    for T in all_triangulations(B, uses_all_vectors=True):
        if not is_unimodular(T):
            for cell in sorted(T.cells):
                sv = [B.vectors[i] for i in cell]
                if abs(det(sv)) != 1:
                    pts = [p for p in parallelepiped_points(sv) if any(p)]
                    return SupernormalityReport(False, "triangulation", tuple(sv), pts[0])
    return SupernormalityReport(True, "triangulation")


def is_supernormal(B, method: str = "simplex") -> SupernormalityReport:
    """Decide supernormality.

    ``method`` is one of ``"simplex"`` (default, scales to a few dozen
    vectors), ``"definition"`` (enumerates every cone spanned by a subset) and
    ``"triangulation"`` (every triangulation using all vectors is
    unimodular). The last two are guarded by vector-count limits.
    """
    B = _as_config(B)
    if B.m > MAX_CONE_DIM:
        raise DimensionTooLarge(f"supernormality is limited to dimension {MAX_CONE_DIM}")
    if method == "simplex":
        return _simplex_method(B)
    guard = DEFINITION_GUARD.get(B.m, 8)
    if B.n > guard:
        raise TooLarge(f"the {method} method is limited to {guard} vectors in dimension {B.m}")
    if method == "definition":
        return _definition_method(B)
    if method == "triangulation":
        if rank(B.vectors) < B.m:
            raise DimensionTooLarge("the triangulation method needs a full-rank configuration")
        return _triangulation_method(B)
    raise ValueError(f"unknown method {method!r}")


def ccw_order(vectors: Sequence[Vector]) -> list[int]:
    """Indices sorted counterclockwise, starting right after the widest angular gap."""

    def half(v):
        return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1

    import functools

    def cmp(i, j):
        a, b = vectors[i], vectors[j]
        if half(a) != half(b):
            return half(a) - half(b)
        d = a[0] * b[1] - a[1] * b[0]
        return -1 if d > 0 else (1 if d < 0 else 0)

    order = sorted(range(len(vectors)), key=functools.cmp_to_key(cmp))
    n = len(order)
    if n <= 1:
        return order

    def gap_key(k):
        # angle from order[k] to order[k+1], compared exactly by quadrant class
        a, b = vectors[order[k]], vectors[order[(k + 1) % n]]
        cross = a[0] * b[1] - a[1] * b[0]
        dotp = a[0] * b[0] + a[1] * b[1]
        return _angle_key(cross, dotp, a, b)

    widest = max(range(n), key=gap_key)
    start = (widest + 1) % n
    return order[start:] + order[:start]


def _angle_key(cross, dotp, a, b):
    """Monotone exact key for the counterclockwise angle from ``a`` to ``b``."""
    na = a[0] * a[0] + a[1] * a[1]
    nb = b[0] * b[0] + b[1] * b[1]
    # cos^2 with sign, as a Fraction; the quadrant class orders first
    c2 = Fraction(dotp * abs(dotp), na * nb)
    if cross > 0:
        return (0, -c2)
    if cross == 0 and dotp > 0:
        return (-1, 0)  # zero angle
    if cross == 0:
        return (1, 0)  # straight angle
    return (2, c2)


def check_dim2_criterion(B) -> bool:
    """Consecutive-determinant test for planar configurations."""
    B = _as_config(B)
    if B.m != 2:
        raise ValueError("the planar criterion needs vectors in Z^2")
    vecs = B.vectors
    prims = [primitive(v) for v in vecs]
    if len(set(prims)) != len(prims):
        raise ValueError("the planar criterion needs vectors on distinct rays")
    if rank(vecs) < 2:
        return all(p == v for p, v in zip(prims, vecs))
    order = ccw_order(vecs)
    n = len(order)
    pairs = [(order[k], order[k + 1]) for k in range(n - 1)]
    a, b = vecs[order[-1]], vecs[order[0]]
    cross = a[0] * b[1] - a[1] * b[0]
    if cross > 0:
        # the widest gap is below a straight angle: B positively spans the plane
        pairs.append((order[-1], order[0]))
    for i, j in pairs:
        d = vecs[i][0] * vecs[j][1] - vecs[i][1] * vecs[j][0]
        if d == 0:
            continue  # opposite vectors bound no planar cone
        if d != 1:
            return False
    return True


# ---------------------------------------------------------------------------
# tightness and TDI


def _lattice_points_for(B: Configuration, c):
    P = polyhedron(B, c)
    return P, relevant_lattice_points(P)


def is_tight(B, c: Sequence[int]) -> TightnessReport:
    """Every inequality is attained by a lattice point of P_c.

    Works for unbounded P_c too: a lattice point attaining an inequality can be
    moved back into the relevant box without leaving the hyperplane.
    """
    B = _as_config(B)
    c = tuple(int(x) for x in c)
    P, pts = _lattice_points_for(B, c)
    if not pts:
        return TightnessReport(c, False, tuple(range(B.n)), None)
    Z = np.array(pts, dtype=object)
    Bm = np.array(B.vectors, dtype=object)
    vals = Z.dot(Bm.T)  # (k, n)
    slack = tuple(i for i in range(B.n) if not (vals[:, i] == c[i]).any())
    u = [int(c[i] - vals[:, i].max()) for i in range(B.n)]
    cprime = tuple(ci - ui for ci, ui in zip(c, u))
    return TightnessReport(c, not slack, slack, cprime)


def tighten(B, c: Sequence[int]) -> tuple[int, ...]:
    """Push every facet of P_c in until it meets a lattice point."""
    rep = is_tight(B, c)
    if rep.tightenedC is None:
        raise NoLatticePoint("P_c contains no lattice point")
    return rep.tightenedC


def tdi_witness(B, c: Sequence[int], all_faces: bool = False):
    """First active set (as a tuple of indices) that is not a normal set, or None."""
    B = _as_config(B)
    P = polyhedron(B, c)
    if P.is_empty:
        raise EmptyPolyhedron("P_c is empty")
    sets = P.active
    if all_faces:
        if not P.is_bounded:
            raise ValueError("face enumeration is implemented for bounded P_c")
        sets = _face_active_sets(P.active)
    for A in sorted(sets, key=lambda s: (len(s), sorted(s))):
        if not A:
            continue
        if not normal_witness([B.vectors[i] for i in A], B.m)[0]:
            return tuple(sorted(A))
    return None


def _face_active_sets(vertex_sets) -> set:
    out = set(vertex_sets)
    frontier = set(vertex_sets)
    while frontier:
        new = set()
        for a in frontier:
            for b in vertex_sets:
                x = a & b
                if x not in out:
                    new.add(x)
        out |= new
        frontier = new
    return out


def is_TDI(B, c: Sequence[int], all_faces: bool = False) -> bool:
    """Total dual integrality via the Hilbert-basis condition on active sets.

    Only minimal faces are inspected by default; active sets of larger faces
    are intersections of these and inherit the property. ``all_faces`` checks
    every face of a bounded P_c instead.
    """
    return tdi_witness(B, c, all_faces) is None


@dataclass(frozen=True)
class TDIPropertyReport:
    supernormal: bool
    sampled: int
    tight: int
    violations: tuple[tuple[int, ...], ...]
    witness: tuple[int, ...] | None


def property_test_tight_implies_tdi(B, samples: int = 200, box: int = 4, seed: int = 0,
                                    exhaustive_box: int | None = None) -> TDIPropertyReport:
    """Sample right-hand sides and compare tightness with total dual integrality.

    Random samples are pushed in to tight ones until ``samples`` distinct
    tight systems have been checked. With ``exhaustive_box`` every
    ``c`` in that cube is tried instead, and the first tight system that is
    not TDI is reported as a witness.
    """
    B = _as_config(B)
    sn = is_supernormal(B).verdict
    if exhaustive_box is not None:
        r = exhaustive_box
        cs = itertools.product(range(-r, r + 1), repeat=B.n)
    else:
        rng = random.Random(seed)

        def draw():
            # a lattice point plus slack, so P_c is never empty
            x0 = [rng.randint(-box, box) for _ in range(B.m)]
            return tuple(dot(b, x0) + rng.randint(0, box) for b in B.vectors)

        cs = (draw() for _ in range(50 * samples))
    violations = []
    witness = None
    sampled = tight = 0
    seen = set()
    for c in cs:
        if exhaustive_box is None and tight >= samples:
            break
        sampled += 1
        rep = is_tight(B, c)
        if exhaustive_box is None:
            if rep.tightenedC is None:
                continue
            c = rep.tightenedC
        elif not rep.tight:
            continue
        if c in seen:
            continue
        seen.add(c)
        tight += 1
        if not is_TDI(B, c):
            violations.append(c)
            if witness is None:
                witness = c
                if exhaustive_box is not None:
                    break
    return TDIPropertyReport(sn, sampled, tight, tuple(violations), witness)
