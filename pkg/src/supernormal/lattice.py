"""Exact integer linear algebra: normal forms, kernels, determinants, Gale duality.

Matrices are plain tuples of row tuples holding Python ints, so every
computation is exact and the values are hashable.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import RankDeficient, NotSaturated

IntMatrix = tuple[tuple[int, ...], ...]
Vector = tuple[int, ...]


def as_matrix(rows: Iterable[Iterable[int]]) -> IntMatrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def shape(M: Sequence[Sequence[int]], ncols: int | None = None) -> tuple[int, int]:
    if len(M) == 0:
        return 0, (ncols or 0)
    return len(M), len(M[0])


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(M: Sequence[Sequence[int]], ncols: int = 0) -> IntMatrix:
    if not M:
        return tuple(() for _ in range(ncols))
    return tuple(zip(*M))


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> tuple:
    Bt = list(zip(*B)) if B else []
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in Bt) for row in A)


def matvec(A: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(sum(a * x for a, x in zip(row, v)) for row in A)


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def primitive(v: Sequence[int]) -> Vector:
    """Divide an integer vector by the gcd of its entries."""
    g = 0
    for x in v:
        g = gcd(g, int(x))
    if g == 0:
        return tuple(int(x) for x in v)
    return tuple(int(x) // g for x in v)


def clear_denominators(v: Sequence[Fraction]) -> Vector:
    """Smallest positive integer multiple of a rational vector, made primitive."""
    den = 1
    for x in v:
        x = Fraction(x)
        den = den * x.denominator // gcd(den, x.denominator)
    return primitive([int(Fraction(x) * den) for x in v])


def det(M: Sequence[Sequence[int]]) -> int:
    """Determinant by Bareiss fraction-free elimination."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(r) for r in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def rank(M: Sequence[Sequence]) -> int:
    """Rank over the rationals."""
    A = [[Fraction(x) for x in r] for r in M]
    if not A:
        return 0
    rows, cols = len(A), len(A[0])
    r = 0
    for j in range(cols):
        piv = next((i for i in range(r, rows) if A[i][j] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        for i in range(r + 1, rows):
            if A[i][j] != 0:
                f = A[i][j] / A[r][j]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        r += 1
        if r == rows:
            break
    return r


def solve(M: Sequence[Sequence], b: Sequence) -> tuple[Fraction, ...] | None:
    """Solve the square system M x = b over Q; None if M is singular."""
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(M, b)]
    for j in range(n):
        piv = next((i for i in range(j, n) if A[i][j] != 0), None)
        if piv is None:
            return None
        A[j], A[piv] = A[piv], A[j]
        p = A[j][j]
        A[j] = [a / p for a in A[j]]
        for i in range(n):
            if i != j and A[i][j] != 0:
                f = A[i][j]
                A[i] = [a - f * c for a, c in zip(A[i], A[j])]
    return tuple(A[i][n] for i in range(n))


def coordinates(basis: Sequence[Sequence[int]], v: Sequence) -> tuple[Fraction, ...] | None:
    """Rational coefficients expressing v in the span of independent vectors, or None.

    The basis may span a proper subspace; None is returned when v is outside it.
    """
    k = len(basis)
    if k == 0:
        return () if all(x == 0 for x in v) else None
    m = len(v)
    # least-squares style normal equations are exact here because the basis is independent
    G = [[dot(basis[i], basis[j]) for j in range(k)] for i in range(k)]
    rhs = [dot(basis[i], v) for i in range(k)]
    lam = solve(G, rhs)
    if lam is None:
        raise RankDeficient("basis vectors are linearly dependent")
    for t in range(m):
        if sum(lam[i] * basis[i][t] for i in range(k)) != v[t]:
            return None
    return lam


def hermite_normal_form(M: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular and ``U @ M == H``. ``H`` is in
    row echelon form with positive pivots, entries above each pivot reduced
    into ``[0, pivot)``, and zero rows at the bottom.
    """
    rows, cols = shape(M)
    H = [list(r) for r in M]
    U = [list(r) for r in identity(rows)]
    r = 0
    for j in range(cols):
        if r == rows:
            break
        while True:
            nz = [i for i in range(r, rows) if H[i][j] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(H[i][j]))
            H[r], H[p] = H[p], H[r]
            U[r], U[p] = U[p], U[r]
            done = True
            for i in range(r + 1, rows):
                if H[i][j]:
                    q = H[i][j] // H[r][j]
                    H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[r])]
                    if H[i][j]:
                        done = False
            if done:
                break
        if H[r][j] == 0:
            continue
        if H[r][j] < 0:
            H[r] = [-a for a in H[r]]
            U[r] = [-a for a in U[r]]
        for i in range(r):
            q = H[i][j] // H[r][j]
            if q:
                H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                U[i] = [a - q * b for a, b in zip(U[i], U[r])]
        r += 1
    return as_matrix(H), as_matrix(U)


def smith_normal_form(M: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form ``(S, U, V)`` with ``U @ M @ V == S``.

    ``U`` and ``V`` are unimodular and the diagonal of ``S`` is a nonnegative
    divisibility chain ``d_1 | d_2 | ...``.
    """
    rows, cols = shape(M)
    S = [list(r) for r in M]
    U = [list(r) for r in identity(rows)]
    V = [list(r) for r in identity(cols)]

    def swap_rows(a, b):
        S[a], S[b] = S[b], S[a]
        U[a], U[b] = U[b], U[a]

    def swap_cols(a, b):
        for R in S:
            R[a], R[b] = R[b], R[a]
        for R in V:
            R[a], R[b] = R[b], R[a]

    def add_row(dst, src, q):  # row dst -= q * row src
        S[dst] = [a - q * b for a, b in zip(S[dst], S[src])]
        U[dst] = [a - q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):  # col dst -= q * col src
        for R in S:
            R[dst] -= q * R[src]
        for R in V:
            R[dst] -= q * R[src]

    for t in range(min(rows, cols)):
        while True:
            nz = [(abs(S[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if S[i][j]]
            if not nz:
                break
            _, pi, pj = min(nz)
            swap_rows(t, pi)
            swap_cols(t, pj)
            clean = True
            for i in range(t + 1, rows):
                if S[i][t]:
                    add_row(i, t, S[i][t] // S[t][t])
                    clean = clean and S[i][t] == 0
            for j in range(t + 1, cols):
                if S[t][j]:
                    add_col(j, t, S[t][j] // S[t][t])
                    clean = clean and S[t][j] == 0
            if not clean:
                continue
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if S[i][j] % S[t][t]), None)
            if bad is None:
                break
            # fold the offending row into row t so the next pass lowers the pivot
            add_row(t, bad[0], -1)
        if t < rows and t < cols and S[t][t] < 0:
            S[t] = [-a for a in S[t]]
            U[t] = [-a for a in U[t]]
    return as_matrix(S), as_matrix(U), as_matrix(V)


def invariant_factors(M: Sequence[Sequence[int]]) -> tuple[int, ...]:
    S, _, _ = smith_normal_form(M)
    return tuple(S[i][i] for i in range(min(shape(M))) if S[i][i] != 0)


def integer_kernel(M: Sequence[Sequence[int]], ncols: int | None = None) -> IntMatrix:
    """Lattice basis (as rows, in HNF) of ``{v in Z^cols : M v = 0}``."""
    rows, cols = shape(M, ncols)
    if rows == 0:
        return identity(cols)
    H, U = hermite_normal_form(transpose(M))
    basis = [U[i] for i in range(cols) if not any(H[i])]
    if not basis:
        return ()
    Hk, _ = hermite_normal_form(basis)
    return tuple(r for r in Hk if any(r))


def row_lattice_hnf(M: Sequence[Sequence[int]]) -> IntMatrix:
    """Canonical basis of the lattice spanned by the rows (zero rows dropped)."""
    if not M:
        return ()
    H, _ = hermite_normal_form(M)
    return tuple(r for r in H if any(r))


def in_row_lattice(M: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    """Whether v is an integer combination of the rows of M."""
    if not M:
        return not any(v)
    return row_lattice_hnf(list(M) + [tuple(v)]) == row_lattice_hnf(M)


def lattice_index(vectors: Sequence[Sequence[int]]) -> int:
    """Index in Z^m of the lattice spanned by m vectors; 0 when they are dependent."""
    vectors = list(vectors)
    if vectors and len(vectors) != len(vectors[0]):
        raise ValueError("lattice_index needs exactly m vectors in Z^m")
    return abs(det(vectors))


def sublattice_index(vectors: Sequence[Sequence[int]]) -> int:
    """Index of the lattice spanned by independent vectors inside its saturation.

    0 if the vectors are dependent.
    """
    vectors = list(vectors)
    if not vectors:
        return 1
    if rank(vectors) < len(vectors):
        return 0
    f = invariant_factors(vectors)
    out = 1
    for d in f:
        out *= d
    return out


@dataclass(frozen=True)
class Configuration:
    """An ordered list of integer vectors ``b_1..b_n`` in ``Z^m``.

    ``matrix`` has the vectors as columns, the way the matrices in the
    literature are printed.
    """

    vectors: tuple[Vector, ...]
    name: str = ""
    dim: int = field(default=-1)
    allow_degenerate: bool = field(default=False, compare=False, repr=False)

    def __post_init__(self):
        vecs = tuple(tuple(int(x) for x in v) for v in self.vectors)
        object.__setattr__(self, "vectors", vecs)
        if self.dim < 0:
            if not vecs:
                raise ValueError("a configuration needs at least one vector")
            object.__setattr__(self, "dim", len(vecs[0]))
        if any(len(v) != self.dim for v in vecs):
            raise ValueError("all vectors must have the same length")
        if not self.allow_degenerate:
            if not vecs:
                raise ValueError("a configuration needs at least one vector")
            if len(set(vecs)) != len(vecs):
                raise ValueError("configuration vectors must be pairwise distinct")
            if any(not any(v) for v in vecs):
                raise ValueError("configuration vectors must be nonzero")

    @classmethod
    def from_columns(cls, matrix: Sequence[Sequence[int]], name: str = "", **kw) -> "Configuration":
        rows = as_matrix(matrix)
        return cls(transpose(rows), name=name, dim=len(rows), **kw)

    @property
    def n(self) -> int:
        return len(self.vectors)

    @property
    def m(self) -> int:
        return self.dim

    @property
    def matrix(self) -> IntMatrix:
        return transpose(self.vectors, self.dim)

    def __len__(self):
        return len(self.vectors)

    def __getitem__(self, i):
        return self.vectors[i]

    def __iter__(self):
        return iter(self.vectors)

    def subset(self, indices: Iterable[int]) -> list[Vector]:
        return [self.vectors[i] for i in indices]


@dataclass(frozen=True)
class GaleDual:
    matrixA: IntMatrix
    sourceB: Configuration

    @property
    def configuration(self) -> Configuration:
        """The columns a_1..a_n of A; may contain zero or repeated vectors."""
        k = len(self.matrixA)
        return Configuration(transpose(self.matrixA, k) if k else tuple(() for _ in range(self.sourceB.n)),
                             name=f"gale({self.sourceB.name})", dim=k, allow_degenerate=True)


def gale_dual(B: Configuration) -> GaleDual:
    """Gale dual ``A`` whose integer kernel is the row lattice of ``B``."""
    Bm = B.matrix
    if rank(Bm) < B.m:
        raise RankDeficient("the rows of B are linearly dependent")
    if any(d != 1 for d in invariant_factors(Bm)):
        raise NotSaturated("B does not generate the lattice Z^m")
    return GaleDual(integer_kernel(Bm), B)
