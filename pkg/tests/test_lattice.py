from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from supernormal.errors import NotSaturated, RankDeficient
from supernormal.lattice import (Configuration, det, gale_dual, hermite_normal_form, in_row_lattice, integer_kernel,
                                 invariant_factors, lattice_index, matmul, rank, smith_normal_form, solve,
                                 sublattice_index)

small = st.integers(-6, 6)


def matrices(max_rows=4, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


def square(max_n=4):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n))


@given(square())
def test_det_matches_sympy(M):
    assert det(M) == Matrix(M).det()


@given(matrices())
def test_rank_matches_sympy(M):
    assert rank(M) == Matrix(M).rank()


@given(matrices())
@settings(max_examples=150)
def test_hnf_shape(M):
    H, U = hermite_normal_form(M)
    assert matmul(U, M) == H
    assert abs(det(U)) == 1
    pivots = []
    for r in H:
        nz = [j for j, x in enumerate(r) if x]
        if nz:
            pivots.append(nz[0])
            assert r[nz[0]] > 0
    assert pivots == sorted(pivots) and len(set(pivots)) == len(pivots)
    for k, j in enumerate(pivots):
        for i in range(k):
            assert 0 <= H[i][j] < H[k][j]


@given(matrices())
@settings(max_examples=150)
def test_snf_matches_sympy(M):
    S, U, V = smith_normal_form(M)
    assert matmul(matmul(U, M), V) == S
    assert abs(det(U)) == 1 and abs(det(V)) == 1
    d = [S[i][i] for i in range(min(len(M), len(M[0])))]
    nz = [x for x in d if x]
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    ref = sympy_snf(Matrix(M))
    expected = sorted(abs(ref[i, i]) for i in range(min(ref.shape)) if ref[i, i] != 0)
    assert sorted(nz) == expected


@given(matrices())
def test_kernel_is_saturated_basis(M):
    cols = len(M[0])
    K = integer_kernel(M)
    assert len(K) == cols - Matrix(M).rank()
    for v in K:
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in M)
    if K:
        # a saturated lattice has all invariant factors equal to 1
        assert set(invariant_factors(K)) == {1}


def test_kernel_examples():
    assert integer_kernel([[2, 3]]) in (((-3, 2),), ((3, -2),))
    assert integer_kernel([[1, 0], [0, 1]]) == ()
    assert integer_kernel((), 3) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_solve_and_singular():
    assert solve([[2, 1], [1, 1]], [3, 2]) == (Fraction(1), Fraction(1))
    assert solve([[1, 2], [2, 4]], [1, 2]) is None


def test_lattice_indices():
    assert lattice_index([(1, 0), (1, 2)]) == 2
    assert lattice_index([(1, 2), (2, 4)]) == 0
    assert sublattice_index([(2, 0, 0)]) == 2
    assert sublattice_index([(1, 1, 0), (1, -1, 0)]) == 2
    assert in_row_lattice([(2, 0), (0, 3)], (4, 3))
    assert not in_row_lattice([(2, 0), (0, 3)], (1, 3))


def test_gale_dual_of_rectangle():
    B = Configuration.from_columns([[1, 1, 1, 1, 1, 1], [0, 1, 2, 0, 1, 2], [0, 0, 0, 1, 1, 1]])
    G = gale_dual(B)
    assert len(G.matrixA) == 3
    for a in G.matrixA:
        assert all(sum(x * y for x, y in zip(a, row)) == 0 for row in B.matrix)
    assert set(invariant_factors(G.matrixA)) == {1}
    # the kernel of A is exactly the row lattice of B
    assert integer_kernel(G.matrixA) == integer_kernel(integer_kernel(B.matrix))


def test_gale_dual_errors():
    with pytest.raises(NotSaturated):
        gale_dual(Configuration(((2,), (4,))))
    with pytest.raises(RankDeficient):
        gale_dual(Configuration(((1, 1), (2, 2)), allow_degenerate=True))
