"""Exact arrangement of all segments between a finite set of integer points.

Points of the arrangement are stored as reduced integer triples
``(X, Y, W)`` standing for ``(X/W, Y/W)`` with ``W > 0``.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

import numpy as np

from . import _kernels

Point = tuple[int, int, int]


def _reduce(X: int, Y: int, W: int) -> Point:
    if W < 0:
        X, Y, W = -X, -Y, -W
    g = gcd(gcd(X, Y), W)
    return (X // g, Y // g, W // g)


def maximal_segments(points: Sequence[tuple[int, int]]) -> tuple[list[tuple[int, int, int, int]], list[list[tuple[int, int]]]]:
    """One segment per line through two or more of the points, spanning the extreme ones.

    Also returns, per segment, the input points lying on it.
    """
    pts = sorted(set((int(x), int(y)) for x, y in points))
    lines: dict = {}
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            (x1, y1), (x2, y2) = pts[i], pts[j]
            a, b = y2 - y1, x1 - x2
            g = gcd(a, b)
            a, b = a // g, b // g
            if a < 0 or (a == 0 and b < 0):
                a, b = -a, -b
            c = a * x1 + b * y1
            lines.setdefault((a, b, c), set()).update((pts[i], pts[j]))
    segs, members = [], []
    for key in sorted(lines):
        on = sorted(lines[key])
        p, q = on[0], on[-1]
        segs.append((p[0], p[1], q[0], q[1]))
        members.append(on)
    return segs, members


def _half(d):
    return 0 if (d[1] > 0 or (d[1] == 0 and d[0] > 0)) else 1


def _ccw_cmp(a, b):
    ha, hb = _half(a), _half(b)
    if ha != hb:
        return ha - hb
    cr = a[0] * b[1] - a[1] * b[0]
    return -1 if cr > 0 else (1 if cr < 0 else 0)


def _direction(p: Point, q: Point) -> tuple[int, int]:
    dx = q[0] * p[2] - p[0] * q[2]
    dy = q[1] * p[2] - p[1] * q[2]
    g = gcd(dx, dy)
    return (dx // g, dy // g)


@dataclass(frozen=True)
class Arrangement:
    points: tuple[tuple[int, int], ...]
    segments: tuple[tuple[int, int, int, int], ...]
    vertices: tuple[Point, ...]
    edges: tuple[tuple[int, int], ...]
    faces: tuple[tuple[int, ...], ...]  # bounded faces as counterclockwise vertex cycles

    def vertex(self, i: int) -> tuple[Fraction, Fraction]:
        X, Y, W = self.vertices[i]
        return Fraction(X, W), Fraction(Y, W)

    def face_sides(self, f: int) -> int:
        """Number of straight sides of a face, after merging collinear edges."""
        return len(self.face_corners(f))

    def face_corners(self, f: int) -> list[int]:
        cyc = self.faces[f]
        k = len(cyc)
        out = []
        for t in range(k):
            a, b, c = self.vertices[cyc[t - 1]], self.vertices[cyc[t]], self.vertices[cyc[(t + 1) % k]]
            d1, d2 = _direction(a, b), _direction(b, c)
            if d1[0] * d2[1] - d1[1] * d2[0] != 0:
                out.append(cyc[t])
        return out

    def face_is_convex(self, f: int) -> bool:
        cyc = self.faces[f]
        k = len(cyc)
        for t in range(k):
            a, b, c = self.vertices[cyc[t - 1]], self.vertices[cyc[t]], self.vertices[cyc[(t + 1) % k]]
            d1, d2 = _direction(a, b), _direction(b, c)
            if d1[0] * d2[1] - d1[1] * d2[0] < 0:
                return False
        return True

    def face_centroid(self, f: int) -> tuple[Fraction, Fraction]:
        """Average of the corners; interior because faces are convex."""
        cs = [self.vertex(i) for i in self.face_corners(f)]
        return (sum(c[0] for c in cs) / len(cs), sum(c[1] for c in cs) / len(cs))

    @property
    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.edges) + len(self.faces) + 1


def build_arrangement(points: Sequence[tuple[int, int]], backend: str | None = None) -> Arrangement:
    """Planar subdivision cut out by every segment between two of the points."""
    pts = tuple(sorted(set((int(x), int(y)) for x, y in points)))
    segs, members = maximal_segments(pts)
    if not segs:
        verts = tuple((x, y, 1) for x, y in pts)
        return Arrangement(pts, (), verts, (), ())
    hits = _kernels.segment_intersections(np.array(segs, dtype=object), backend=backend)
    on_seg: list[set] = [set((x, y, 1) for x, y in mem) for mem in members]
    for i, j, X, Y, W in hits.tolist():
        p = (int(X), int(Y), int(W))
        on_seg[i].add(p)
        on_seg[j].add(p)
    vid: dict = {}
    edges = set()
    for s, pset in zip(segs, on_seg):
        x1, y1, x2, y2 = s
        dx, dy = x2 - x1, y2 - y1

        def param(p, x1=x1, y1=y1, dx=dx, dy=dy):
            return Fraction((p[0] - x1 * p[2]) * dx + (p[1] - y1 * p[2]) * dy, p[2])

        chain = sorted(pset, key=param)
        for p in chain:
            if p not in vid:
                vid[p] = len(vid)
        for a, b in zip(chain, chain[1:]):
            u, v = vid[a], vid[b]
            edges.add((min(u, v), max(u, v)))
    # renumber vertices in sorted order for determinism
    order = sorted(vid, key=lambda p: (Fraction(p[0], p[2]), Fraction(p[1], p[2])))
    new = {p: k for k, p in enumerate(order)}
    old_to_new = {vid[p]: new[p] for p in vid}
    edges = sorted(tuple(sorted((old_to_new[u], old_to_new[v]))) for u, v in edges)
    verts = tuple(order)
    faces = _walk_faces(verts, edges)
    return Arrangement(pts, tuple(segs), verts, tuple(edges), faces)


def _walk_faces(verts, edges) -> tuple[tuple[int, ...], ...]:
    nbrs: dict[int, list[int]] = {i: [] for i in range(len(verts))}
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    rot = {}
    pos = {}
    for v, ns in nbrs.items():
        ns.sort(key=functools.cmp_to_key(lambda a, b, v=v: _ccw_cmp(_direction(verts[v], verts[a]),
                                                                     _direction(verts[v], verts[b]))))
        rot[v] = ns
        pos[v] = {w: k for k, w in enumerate(ns)}
    seen = set()
    faces = []
    for u, v in edges:
        for start in ((u, v), (v, u)):
            if start in seen:
                continue
            cyc = []
            e = start
            while e not in seen:
                seen.add(e)
                a, b = e
                cyc.append(a)
                ns = rot[b]
                w = ns[(pos[b][a] - 1) % len(ns)]
                e = (b, w)
            if _signed_area2(verts, cyc) > 0:
                k = cyc.index(min(cyc))
                faces.append(tuple(cyc[k:] + cyc[:k]))
    return tuple(sorted(faces))


def _signed_area2(verts, cyc) -> Fraction:
    s = Fraction(0)
    k = len(cyc)
    for t in range(k):
        X1, Y1, W1 = verts[cyc[t]]
        X2, Y2, W2 = verts[cyc[(t + 1) % k]]
        s += Fraction(X1 * Y2 - X2 * Y1, W1 * W2)
    return s
