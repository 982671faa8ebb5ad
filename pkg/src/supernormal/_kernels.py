"""Hot integer loops, with a numba path and a pure-numpy path.

Set ``SUPERNORMAL_NUMBA=0`` to force the numpy path. Inputs whose magnitudes
could overflow int64 are always routed to numpy on ``dtype=object`` arrays,
which is slow but exact.
"""
from __future__ import annotations

import itertools
import os

import numpy as np

try:
    from numba import njit
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and os.environ.get("SUPERNORMAL_NUMBA", "1") != "0"

# every kernel keeps intermediate values below this bound when it runs on int64
_SAFE = 2 ** 62


def _fits(*bounds: int) -> bool:
    prod = 1
    for b in bounds:
        prod *= max(1, abs(int(b)))
        if prod >= _SAFE:
            return False
    return True


def _maxabs(a) -> int:
    a = np.asarray(a, dtype=object)
    return int(max((abs(int(x)) for x in a.flat), default=0))


# ---------------------------------------------------------------------------
# lattice points of {x : G x <= c} inside an integer box


def _box_points_numpy(lo, hi, G, c):
    lo = [int(x) for x in lo]
    hi = [int(x) for x in hi]
    m = len(lo)
    if any(h < l for l, h in zip(lo, hi)):
        return np.zeros((0, m), dtype=object)
    exact = not _fits(_maxabs(G) + 1, max(map(abs, lo + hi)) + 1, m + 1) or not _fits(_maxabs(c) + 1, 4)
    dtype = object if exact else np.int64
    G = np.asarray(G, dtype=dtype).reshape(-1, m)
    c = np.asarray(c, dtype=dtype)
    axes = [np.arange(l, h + 1, dtype=np.int64).astype(dtype) for l, h in zip(lo, hi)]
    out = []
    # chunk over the first axis to bound memory
    rest = [a for a in axes[1:]]
    tail = np.array(list(itertools.product(*rest)), dtype=dtype).reshape(-1, m - 1) if m > 1 else np.zeros((1, 0), dtype=dtype)
    for x0 in axes[0]:
        pts = np.concatenate([np.full((tail.shape[0], 1), x0, dtype=dtype), tail], axis=1)
        if G.shape[0]:
            ok = np.all(pts @ G.T <= c, axis=1)
            pts = pts[ok]
        out.append(pts)
    res = np.concatenate(out, axis=0) if out else np.zeros((0, m), dtype=dtype)
    return res.astype(object)


if HAVE_NUMBA:

    @njit(cache=True)
    def _box_points_nb(lo, hi, G, c):  # pragma: no cover - compiled
        m = lo.shape[0]
        k = G.shape[0]
        total = 1
        for t in range(m):
            total *= hi[t] - lo[t] + 1
        out = np.empty((total, m), dtype=np.int64)
        x = lo.copy()
        cnt = 0
        for _ in range(total):
            ok = True
            for r in range(k):
                s = 0
                for t in range(m):
                    s += G[r, t] * x[t]
                if s > c[r]:
                    ok = False
                    break
            if ok:
                for t in range(m):
                    out[cnt, t] = x[t]
                cnt += 1
            # odometer, last coordinate fastest
            t = m - 1
            while t >= 0:
                x[t] += 1
                if x[t] <= hi[t]:
                    break
                x[t] = lo[t]
                t -= 1
        return out[:cnt]


def _box_points_numba(lo, hi, G, c):
    m = len(lo)
    if any(int(h) < int(l) for l, h in zip(lo, hi)):
        return np.zeros((0, m), dtype=object)
    G = np.asarray(G, dtype=np.int64).reshape(-1, m)
    res = _box_points_nb(np.asarray(lo, dtype=np.int64), np.asarray(hi, dtype=np.int64), G,
                         np.asarray(c, dtype=np.int64))
    return res.astype(object)


def box_points(lo, hi, G, c, *, backend: str | None = None) -> np.ndarray:
    """Integer points ``x`` with ``lo <= x <= hi`` and ``G x <= c``, lex-sorted.

    Returns an object array of Python ints with shape ``(N, m)``.
    """
    lo = [int(x) for x in lo]
    hi = [int(x) for x in hi]
    m = len(lo)
    vol = 1
    for l, h in zip(lo, hi):
        vol *= max(0, h - l + 1)
    bound = max([abs(x) for x in lo + hi] + [1])
    safe = (_fits(_maxabs(G) + 1, bound, m + 1) and _fits(_maxabs(c) + 1, 2) and vol < 50_000_000)
    if backend is None:
        backend = "numba" if (USE_NUMBA and safe) else "numpy"
    if backend == "numba" and safe:
        return _box_points_numba(lo, hi, G, c)
    return _box_points_numpy(lo, hi, G, c)


# ---------------------------------------------------------------------------
# candidate facet normals: generalised cross products of (d-1)-row matrices


def _perm_sign(p):
    s = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            s = -s
    return s


def _dets_numpy(mats):
    """Exact determinants of a stack of small square matrices (Leibniz)."""
    N, k, _ = mats.shape
    if k == 0:
        return np.ones(N, dtype=mats.dtype)
    out = np.zeros(N, dtype=mats.dtype)
    for p in itertools.permutations(range(k)):
        term = np.full(N, _perm_sign(p), dtype=mats.dtype)
        for i in range(k):
            term = term * mats[:, i, p[i]]
        out = out + term
    return out


def _normals_numpy(rows_stack):
    """Generalised cross product of each ``(d-1) x d`` matrix in the stack."""
    N, k, d = rows_stack.shape
    cols = []
    for j in range(d):
        minor = np.delete(rows_stack, j, axis=2)
        cols.append(((-1) ** j) * _dets_numpy(minor))
    return np.stack(cols, axis=1) if cols else np.zeros((N, 0), dtype=rows_stack.dtype)


if HAVE_NUMBA:

    @njit(cache=True)
    def _det_bareiss(A):  # pragma: no cover - compiled
        n = A.shape[0]
        if n == 0:
            return 1
        M = A.copy()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if M[k, k] == 0:
                found = -1
                for i in range(k + 1, n):
                    if M[i, k] != 0:
                        found = i
                        break
                if found < 0:
                    return 0
                for t in range(n):
                    tmp = M[k, t]
                    M[k, t] = M[found, t]
                    M[found, t] = tmp
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    M[i, j] = (M[i, j] * M[k, k] - M[i, k] * M[k, j]) // prev
            prev = M[k, k]
        return sign * M[n - 1, n - 1]

    @njit(cache=True)
    def _normals_nb(gens, eqs, combos):  # pragma: no cover - compiled
        N = combos.shape[0]
        s = combos.shape[1]
        e = eqs.shape[0]
        d = gens.shape[1]
        k = s + e
        out = np.zeros((N, d), dtype=np.int64)
        rows = np.zeros((k, d), dtype=np.int64)
        minor = np.zeros((k, k), dtype=np.int64)
        for n in range(N):
            for i in range(s):
                for t in range(d):
                    rows[i, t] = gens[combos[n, i], t]
            for i in range(e):
                for t in range(d):
                    rows[s + i, t] = eqs[i, t]
            for j in range(d):
                for i in range(k):
                    cc = 0
                    for t in range(d):
                        if t != j:
                            minor[i, cc] = rows[i, t]
                            cc += 1
                sgn = 1 if j % 2 == 0 else -1
                out[n, j] = sgn * _det_bareiss(minor)
        return out


def candidate_normals(gens, eqs, combos, *, backend: str | None = None) -> np.ndarray:
    """Normals to the hyperplanes through ``gens[combo]`` and the rows of ``eqs``.

    Each combo has ``d - 1 - len(eqs)`` generator indices, so every stacked
    matrix is ``(d - 1) x d`` and its generalised cross product is the normal
    (zero when the rows are dependent). Returns an object array ``(N, d)``.
    """
    gens = np.asarray(gens, dtype=object)
    d = gens.shape[1]
    eqs = np.asarray(eqs, dtype=object).reshape(-1, d)
    combos = np.asarray(combos, dtype=np.int64)
    if combos.ndim != 2:
        combos = combos.reshape(len(combos), -1 if combos.size else 0)
    N = combos.shape[0]
    if N == 0:
        return np.zeros((0, d), dtype=object)
    k = d - 1
    bound = max(_maxabs(gens), _maxabs(eqs), 1)
    # Hadamard-style bound on a k x k minor
    safe = _fits(*([bound * k] * max(k, 1)), 4)
    if backend is None:
        backend = "numba" if (USE_NUMBA and safe) else "numpy"
    if backend == "numba" and safe:
        res = _normals_nb(gens.astype(np.int64), eqs.astype(np.int64), combos)
        return res.astype(object)
    dtype = np.int64 if safe else object
    stack = np.concatenate([gens[combos].astype(dtype),
                            np.broadcast_to(eqs.astype(dtype), (N,) + eqs.shape)], axis=1)
    return _normals_numpy(stack).astype(object)


# ---------------------------------------------------------------------------
# pairwise intersections of integer segments (no two on a common line)


def _isect_numpy(seg):
    seg = np.asarray(seg, dtype=object)
    S = seg.shape[0]
    bound = _maxabs(seg) + 1
    dtype = np.int64 if _fits(bound, bound, bound, 64) else object
    seg = seg.astype(dtype)
    px, py, qx, qy = seg[:, 0], seg[:, 1], seg[:, 2], seg[:, 3]
    dx, dy = qx - px, qy - py
    res = []
    for i in range(S - 1):
        j = np.arange(i + 1, S)
        ex, ey = dx[j], dy[j]
        d = dx[i] * ey - dy[i] * ex
        rx, ry = px[j] - px[i], py[j] - py[i]
        tn = rx * ey - ry * ex
        sn = rx * dy[i] - ry * dx[i]
        neg = d < 0
        d = np.where(neg, -d, d)
        tn = np.where(neg, -tn, tn)
        sn = np.where(neg, -sn, sn)
        ok = (d != 0) & (tn >= 0) & (tn <= d) & (sn >= 0) & (sn <= d)
        if not np.any(ok):
            continue
        jj, d, tn = j[ok], d[ok], tn[ok]
        X = px[i] * d + tn * dx[i]
        Y = py[i] * d + tn * dy[i]
        if dtype is object:
            g = np.array([np.gcd(np.gcd(int(a), int(b)), int(w)) for a, b, w in zip(X, Y, d)], dtype=object)
        else:
            g = np.gcd(np.gcd(X, Y), d)
        res.append(np.stack([np.full(len(jj), i), jj, X // g, Y // g, d // g], axis=1).astype(object))
    if not res:
        return np.zeros((0, 5), dtype=object)
    return np.concatenate(res, axis=0)


if HAVE_NUMBA:

    @njit(cache=True)
    def _gcd(a, b):  # pragma: no cover - compiled
        a = abs(a)
        b = abs(b)
        while b:
            a, b = b, a % b
        return a

    @njit(cache=True)
    def _isect_pass(seg, out, fill):  # pragma: no cover - compiled
        S = seg.shape[0]
        cnt = 0
        for i in range(S - 1):
            px = seg[i, 0]
            py = seg[i, 1]
            dx = seg[i, 2] - px
            dy = seg[i, 3] - py
            for j in range(i + 1, S):
                ex = seg[j, 2] - seg[j, 0]
                ey = seg[j, 3] - seg[j, 1]
                d = dx * ey - dy * ex
                if d == 0:
                    continue
                rx = seg[j, 0] - px
                ry = seg[j, 1] - py
                tn = rx * ey - ry * ex
                sn = rx * dy - ry * dx
                if d < 0:
                    d = -d
                    tn = -tn
                    sn = -sn
                if tn < 0 or tn > d or sn < 0 or sn > d:
                    continue
                if fill:
                    X = px * d + tn * dx
                    Y = py * d + tn * dy
                    g = _gcd(_gcd(X, Y), d)
                    out[cnt, 0] = i
                    out[cnt, 1] = j
                    out[cnt, 2] = X // g
                    out[cnt, 3] = Y // g
                    out[cnt, 4] = d // g
                cnt += 1
        return cnt


def segment_intersections(seg, *, backend: str | None = None) -> np.ndarray:
    """All intersecting pairs among integer segments ``(x1, y1, x2, y2)``.

    No two segments may lie on a common line. Returns rows
    ``(i, j, X, Y, W)`` meaning the pair ``i < j`` meets at ``(X/W, Y/W)``
    with ``W > 0`` and ``gcd(X, Y, W) = 1``.
    """
    seg = np.asarray(seg, dtype=object).reshape(-1, 4)
    bound = _maxabs(seg) + 1
    # |d| <= 8 b^2, |X| <= b * 8 b^2 + 8 b^2 * 2 b
    safe = _fits(bound, bound, bound, 64)
    if backend is None:
        backend = "numba" if (USE_NUMBA and safe) else "numpy"
    if backend == "numba" and safe:
        s = seg.astype(np.int64)
        dummy = np.zeros((0, 5), dtype=np.int64)
        n = _isect_pass(s, dummy, False)
        out = np.zeros((n, 5), dtype=np.int64)
        _isect_pass(s, out, True)
        return out.astype(object)
    return _isect_numpy(seg)
