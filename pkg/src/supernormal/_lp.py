"""Dense two-phase simplex over the rationals (Bland's rule, no cycling).

Only meant for the small systems that appear here (tens of variables).
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import Unbounded

_ZERO = Fraction(0)


def _pivot(T, r, c):
    p = T[r][c]
    T[r] = [x / p for x in T[r]]
    row = T[r]
    for i in range(len(T)):
        if i != r and T[i][c] != 0:
            f = T[i][c]
            T[i] = [a - f * b for a, b in zip(T[i], row)]


def _simplex(T, basis, ncols, allowed):
    """Maximise the objective stored in the last row (as reduced costs)."""
    obj = len(T) - 1
    while True:
        enter = next((j for j in range(ncols) if allowed[j] and T[obj][j] < 0), None)
        if enter is None:
            return
        best = None
        for i in range(obj):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            raise Unbounded("linear program is unbounded")
        _pivot(T, best[1], enter)
        basis[best[1]] = enter


def linprog(c: Sequence, A_ub=(), b_ub=(), A_eq=(), b_eq=(), free: bool = True):
    """Maximise ``c.x`` subject to ``A_ub x <= b_ub``, ``A_eq x == b_eq``.

    Variables are free when ``free`` is set, otherwise nonnegative.
    Returns the optimal point as Fractions, or None when infeasible.
    Raises Unbounded if the objective is unbounded.
    """
    n = len(c)
    rows = [([Fraction(a) for a in r], Fraction(b), "ub") for r, b in zip(A_ub, b_ub)]
    rows += [([Fraction(a) for a in r], Fraction(b), "eq") for r, b in zip(A_eq, b_eq)]
    nv = 2 * n if free else n

    def expand(r):
        return r + [-a for a in r] if free else list(r)

    n_slack = sum(1 for _, _, k in rows if k == "ub")
    ncols = nv + n_slack + len(rows)  # structural, slacks, artificials
    T = []
    basis = []
    s = 0
    for i, (r, b, kind) in enumerate(rows):
        line = expand(r) + [_ZERO] * (n_slack + len(rows))
        if kind == "ub":
            line[nv + s] = Fraction(1)
            s += 1
        if b < 0:
            line = [-a for a in line]
            b = -b
        line[nv + n_slack + i] = Fraction(1)
        T.append(line + [b])
        basis.append(nv + n_slack + i)
    # phase 1: maximise -sum(artificials)
    obj = [_ZERO] * (ncols + 1)
    for i in range(len(rows)):
        obj = [o - a for o, a in zip(obj, T[i])]
    for i in range(len(rows)):
        obj[nv + n_slack + i] = _ZERO
    T.append(obj)
    allowed = [True] * ncols
    _simplex(T, basis, ncols, allowed)
    if T[-1][-1] != 0:
        return None
    # drive artificials out of the basis where possible
    for i, bv in enumerate(basis):
        if bv >= nv + n_slack:
            j = next((j for j in range(nv + n_slack) if T[i][j] != 0), None)
            if j is not None:
                _pivot(T, i, j)
                basis[i] = j
    for j in range(nv + n_slack, ncols):
        allowed[j] = False
    # phase 2
    cc = expand([Fraction(a) for a in c]) + [_ZERO] * (n_slack + len(rows))
    obj = [-a for a in cc] + [_ZERO]
    for i, bv in enumerate(basis):
        if obj[bv] != 0:
            f = obj[bv]
            obj = [o - f * a for o, a in zip(obj, T[i])]
    T[-1] = obj
    _simplex(T, basis, ncols, allowed)
    x = [_ZERO] * nv
    for i, bv in enumerate(basis):
        if bv < nv:
            x[bv] = T[i][-1]
    if free:
        return tuple(x[j] - x[n + j] for j in range(n))
    return tuple(x)


def strictly_feasible(M: Sequence[Sequence], homogeneous_eq: Sequence[Sequence] = ()):
    """A point ``x`` with ``M x > 0`` (and ``E x == 0``), or None.

    The system is homogeneous, so ``M x >= 1`` is an equivalent feasibility
    question.
    """
    if not M:
        n = len(homogeneous_eq[0]) if homogeneous_eq else 0
        return tuple(Fraction(0) for _ in range(n))
    n = len(M[0])
    A_ub = [[-a for a in row] for row in M]
    b_ub = [-1] * len(M)
    return linprog([0] * n, A_ub, b_ub, homogeneous_eq, [0] * len(homogeneous_eq))
