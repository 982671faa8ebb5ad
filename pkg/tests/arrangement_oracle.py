"""Independent face oracle for the segment arrangement of a lattice polygon.

Cut the polygon by the full lines through every pair of lattice points, then
glue neighbouring pieces whose common edge is not covered by a real segment.
Faces of the segment arrangement are convex, so a glued face's side count is
the number of corners of the hull of its pieces.
"""
import itertools
from fractions import Fraction


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _hull(pts):
    pts = sorted(set(pts))
    if len(pts) <= 2:
        return pts
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _cut(poly, line):
    """Split a convex polygon by a*x + b*y = c; returns the non-degenerate parts."""
    a, b, c = line
    side = [a * x + b * y - c for x, y in poly]
    if all(s >= 0 for s in side) or all(s <= 0 for s in side):
        return [poly]
    pos, neg = [], []
    k = len(poly)
    for i in range(k):
        p, q = poly[i], poly[(i + 1) % k]
        sp, sq = side[i], side[(i + 1) % k]
        if sp >= 0:
            pos.append(p)
        if sp <= 0:
            neg.append(p)
        if sp * sq < 0:
            t = Fraction(sp, 1) / (sp - sq)
            r = (p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1]))
            pos.append(r)
            neg.append(r)
    return [pos, neg]


def _on_segment(pt, seg):
    p, q = seg
    if _cross(p, q, pt) != 0:
        return False
    return min(p[0], q[0]) <= pt[0] <= max(p[0], q[0]) and min(p[1], q[1]) <= pt[1] <= max(p[1], q[1])


def face_sides(points):
    """Sorted list of side counts of the bounded faces."""
    points = [(Fraction(x), Fraction(y)) for x, y in points]
    hull = _hull(points)
    segs = list(itertools.combinations(points, 2))
    lines = set()
    for p, q in segs:
        a, b = q[1] - p[1], p[0] - q[0]
        c = a * p[0] + b * p[1]
        g = max(abs(a), abs(b))
        a, b, c = a / g, b / g, c / g
        if a < 0 or (a == 0 and b < 0):
            a, b, c = -a, -b, -c
        lines.add((a, b, c))
    pieces = [hull]
    for ln in sorted(lines):
        pieces = [part for P in pieces for part in _cut(P, ln)]
    # union-find over pieces sharing an uncovered edge
    parent = list(range(len(pieces)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    owner = {}
    for k, P in enumerate(pieces):
        for i in range(len(P)):
            e = frozenset((P[i], P[(i + 1) % len(P)]))
            owner.setdefault(e, []).append(k)
    for e, ks in owner.items():
        if len(ks) != 2:
            continue
        p, q = tuple(e)
        mid = ((p[0] + q[0]) / 2, (p[1] + q[1]) / 2)
        if not any(_on_segment(mid, s) for s in segs):
            parent[find(ks[0])] = find(ks[1])
    groups = {}
    for k, P in enumerate(pieces):
        groups.setdefault(find(k), []).extend(P)
    return sorted(len(_hull(v)) for v in groups.values())
