"""Chamber complexes of configurations in dimension at most three, lattice
polygons, the planar complex of a polygon and its SVG picture."""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

from . import _kernels
from .arrangement import Arrangement, build_arrangement
from .errors import DimensionTooLarge, NotPointed, RankDeficient, TooManyPoints
from .lattice import Configuration, det, dot, rank, solve
from .polyhedra import cone_from

MAX_POLYGON_POINTS = 120


# ---------------------------------------------------------------------------
# lattice polygons


def _convex_hull(points):
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


@dataclass(frozen=True)
class LatticePolygon:
    """Convex hull of integer points; vertices are stored counterclockwise."""

    vertices: tuple[tuple[int, int], ...]
    latticePoints: tuple[tuple[int, int], ...] = field(default=(), compare=False)

    @classmethod
    def from_vertices(cls, vertices: Sequence[Sequence[int]]) -> "LatticePolygon":
        hull = tuple(tuple(int(x) for x in v) for v in _convex_hull([tuple(v) for v in vertices]))
        return cls(hull, _polygon_lattice_points(hull))

    @classmethod
    def rectangle(cls, a: int, b: int) -> "LatticePolygon":
        return cls.from_vertices([(0, 0), (a, 0), (a, b), (0, b)])


def _polygon_lattice_points(hull) -> tuple[tuple[int, int], ...]:
    xs = [p[0] for p in hull]
    ys = [p[1] for p in hull]
    lo, hi = [min(xs), min(ys)], [max(xs), max(ys)]
    G, c = [], []
    k = len(hull)
    if k >= 3:
        for t in range(k):
            (px, py), (qx, qy) = hull[t], hull[(t + 1) % k]
            G.append((qy - py, -(qx - px)))
            c.append((qy - py) * px - (qx - px) * py)
    elif k == 2:
        (px, py), (qx, qy) = hull
        a, b = qy - py, -(qx - px)
        G += [(a, b), (-a, -b)]
        c += [a * px + b * py, -(a * px + b * py)]
    pts = _kernels.box_points(lo, hi, G, c) if G else [list(p) for p in hull]
    return tuple(sorted(tuple(int(x) for x in p) for p in (pts.tolist() if hasattr(pts, "tolist") else pts)))


def cone_over_polygon(P: LatticePolygon, name: str = "") -> Configuration:
    """Vectors ``(1, u, v)`` for the lattice points ``(u, v)``, ordered by ``(v, u)``."""
    pts = sorted(P.latticePoints, key=lambda p: (p[1], p[0]))
    return Configuration(tuple((1, u, v) for u, v in pts), name=name)


# ---------------------------------------------------------------------------
# the planar complex of a polygon


@dataclass(frozen=True)
class PlanarChamberComplex:
    polygon: LatticePolygon
    arrangement: Arrangement
    perFaceEdgeCounts: tuple[int, ...]

    @property
    def mu(self) -> int:
        return max(self.perFaceEdgeCounts, default=0)

    @property
    def census(self) -> dict[int, int]:
        return dict(sorted(Counter(self.perFaceEdgeCounts).items()))

    @property
    def n_faces(self) -> int:
        return len(self.perFaceEdgeCounts)

    def centroids(self) -> list[tuple[Fraction, Fraction]]:
        return [self.arrangement.face_centroid(f) for f in range(self.n_faces)]

    def to_json(self) -> dict:
        return {"faces": self.n_faces,
                "faces_by_edges": {str(k): v for k, v in self.census.items()},
                "mu": self.mu}


def polygon_chamber_complex(P: LatticePolygon, max_points: int = MAX_POLYGON_POINTS,
                            unsafe_large: bool = False) -> PlanarChamberComplex:
    if len(P.latticePoints) > max_points and not unsafe_large:
        raise TooManyPoints(f"{len(P.latticePoints)} lattice points exceed the guard of {max_points}")
    A = build_arrangement(P.latticePoints)
    counts = tuple(A.face_sides(f) for f in range(len(A.faces)))
    return PlanarChamberComplex(P, A, counts)


def mu(P: LatticePolygon, **kw) -> int:
    return polygon_chamber_complex(P, **kw).mu


# ---------------------------------------------------------------------------
# general chamber complexes (m <= 3)


@dataclass(frozen=True)
class Chamber:
    subsets: tuple[tuple[int, ...], ...]  # m-subsets whose cones contain the chamber
    sample: tuple[Fraction, ...]
    facets: int
    samples: tuple[tuple[Fraction, ...], ...] = ()


@dataclass(frozen=True)
class ChamberComplex:
    config: Configuration
    maximalChambers: tuple[Chamber, ...]

    @property
    def census(self) -> dict[int, int]:
        return dict(sorted(Counter(c.facets for c in self.maximalChambers).items()))

    def locate(self, w: Sequence) -> int | None:
        """Index of the chamber whose interior contains ``w`` (None on walls or outside)."""
        sig = chamber_signature(self.config, w)
        if sig is None:
            return None
        for k, ch in enumerate(self.maximalChambers):
            if ch.subsets == sig:
                return k
        return None


def _bases(config: Configuration):
    return [S for S in itertools.combinations(range(config.n), config.m)
            if det([config.vectors[i] for i in S]) != 0]


def chamber_signature(config: Configuration, w: Sequence) -> tuple[tuple[int, ...], ...] | None:
    """Bases whose cone contains ``w``; None if ``w`` lies on a wall or outside cone(B)."""
    vecs = config.vectors
    out = []
    for S in _bases(config):
        M = [vecs[i] for i in S]
        lam = solve([[M[k][t] for k in range(len(S))] for t in range(config.m)], list(w))
        if any(x == 0 for x in lam):
            # w sits on the boundary of this simplicial cone
            if all(x >= 0 for x in lam):
                return None
            continue
        if all(x > 0 for x in lam):
            out.append(S)
    return tuple(out) if out else None


def _chart(config: Configuration):
    """Functional ``u`` positive on B and two more rows completing it to a basis."""
    vecs = config.vectors
    if all(v[0] > 0 for v in vecs):
        u = (1, 0, 0)
    else:
        C = cone_from(vecs, 3)
        if not C.is_pointed:
            raise NotPointed("cross-sections need a pointed configuration")
        u = C.grading()
    eye = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    for a, b in itertools.combinations(eye, 2):
        if det([u, a, b]) != 0:
            return u, a, b
    raise AssertionError


def chamber_complex(config: Configuration) -> ChamberComplex:
    """Maximal chambers: regions cut out of cone(B) by the cones over (m-1)-subsets."""
    m = config.m
    if m > 3:
        raise DimensionTooLarge("chamber complexes are computed for m <= 3")
    if rank(config.vectors) < m:
        raise RankDeficient("chamber complexes need a full-rank configuration")
    vecs = config.vectors
    if m == 1:
        signs = sorted({1 if v[0] > 0 else -1 for v in vecs}, reverse=True)
        samples = [(Fraction(s),) for s in signs]
        chambers = [Chamber(chamber_signature(config, w), w, 1, (w, (w[0] * 2,))) for w in samples]
        return ChamberComplex(config, tuple(chambers))
    if m == 2:
        return ChamberComplex(config, tuple(_planar_fan_chambers(config)))
    return ChamberComplex(config, tuple(_cross_section_chambers(config)))


def _planar_fan_chambers(config):
    from .lattice import primitive
    from .verdicts import ccw_order

    vecs = config.vectors
    rays = sorted({primitive(v) for v in vecs})
    order = ccw_order(rays)
    pairs = list(zip(order, order[1:]))
    a, b = rays[order[-1]], rays[order[0]]
    if a[0] * b[1] - a[1] * b[0] > 0:
        pairs.append((order[-1], order[0]))
    out = []
    for i, j in pairs:
        r, s = rays[i], rays[j]
        if r[0] * s[1] - r[1] * s[0] <= 0:
            continue
        w1 = tuple(Fraction(x + y) for x, y in zip(r, s))
        w2 = tuple(Fraction(2 * x + y) for x, y in zip(r, s))
        out.append(Chamber(chamber_signature(config, w1), w1, 2, (w1, w2)))
    return out


def _cross_section_chambers(config):
    vecs = config.vectors
    u, a, b = _chart(config)
    # image of b on the plane u.x = 1 in the chart (a.x, b.x), scaled to integers
    raw = [(Fraction(dot(a, v), dot(u, v)), Fraction(dot(b, v), dot(u, v))) for v in vecs]
    L = 1
    for x, y in raw:
        for q in (x.denominator, y.denominator):
            L = L * q // gcd(L, q)
    pts = [(int(x * L), int(y * L)) for x, y in raw]
    A = build_arrangement(pts)
    M = [list(u), list(a), list(b)]

    def lift(X, Y):
        x = solve(M, [Fraction(1), X / L, Y / L])
        return tuple(x)

    out = []
    for f in range(len(A.faces)):
        cx, cy = A.face_centroid(f)
        corner = A.vertex(A.face_corners(f)[0])
        w1 = lift(cx, cy)
        w2 = lift((3 * cx + corner[0]) / 4, (3 * cy + corner[1]) / 4)
        out.append(Chamber(chamber_signature(config, w1), w1, A.face_sides(f), (w1, w2)))
    return out


# ---------------------------------------------------------------------------
# SVG


_PALETTE = {3: "#dbe9f6", 4: "#a9cce3", 5: "#f5b041", 6: "#e74c3c"}


def _fmt(q: Fraction) -> str:
    """Fixed four-decimal rendering of a rational, rounded half up, without floats."""
    scaled = q * 10000
    n = scaled.numerator * 2 + scaled.denominator
    v = n // (2 * scaled.denominator)
    sign = "-" if v < 0 else ""
    v = abs(v)
    return f"{sign}{v // 10000}.{v % 10000:04d}"


def emit_svg(pcc: PlanarChamberComplex, scale: int = 60, shade: bool = True, highlight: bool = True,
             margin: int = 20) -> str:
    """Deterministic SVG of the complex: faces, segments and lattice points."""
    A = pcc.arrangement
    pts = pcc.polygon.latticePoints
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    x0, y1 = min(xs), max(ys)
    width = (max(xs) - x0) * scale + 2 * margin
    height = (y1 - min(ys)) * scale + 2 * margin

    def tx(x):
        return _fmt((x - x0) * scale + margin)

    def ty(y):
        return _fmt((y1 - y) * scale + margin)

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
           f'viewBox="0 0 {width} {height}">']
    top = pcc.mu
    for f in range(pcc.n_faces):
        k = pcc.perFaceEdgeCounts[f]
        corners = [A.vertex(i) for i in A.face_corners(f)]
        path = " ".join(f"{tx(x)},{ty(y)}" for x, y in corners)
        fill = _PALETTE.get(k, "#8e44ad") if shade else "none"
        stroke = ' stroke="#c0392b" stroke-width="3"' if (highlight and k == top and top > 3) else ""
        out.append(f'  <polygon points="{path}" fill="{fill}"{stroke} data-sides="{k}"/>')
    for x1, y1_, x2, y2 in A.segments:
        out.append(f'  <line x1="{tx(Fraction(x1))}" y1="{ty(Fraction(y1_))}" '
                   f'x2="{tx(Fraction(x2))}" y2="{ty(Fraction(y2))}" stroke="black" stroke-width="1"/>')
    for x, y in pts:
        out.append(f'  <circle cx="{tx(Fraction(x))}" cy="{ty(Fraction(y))}" r="3" fill="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
