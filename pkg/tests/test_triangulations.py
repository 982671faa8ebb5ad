import itertools
import random

import pytest

from supernormal.errors import EmptyPolyhedron
from supernormal.fixtures import fixture
from supernormal.lattice import Configuration, det, gale_dual
from supernormal.triangulations import (all_triangulations, circuits, intersect_properly, is_regular, is_unimodular,
                                        refine_to_triangulation, regular_subdivision)

NONREGULAR_RECT = [
    [[1, 2, 5], [1, 2, 6], [1, 3, 5], [1, 3, 6], [2, 4, 5], [2, 4, 6], [3, 4, 5], [3, 4, 6]],
    [[1, 3, 4], [1, 3, 5], [1, 4, 6], [1, 5, 6], [2, 3, 4], [2, 3, 5], [2, 4, 6], [2, 5, 6]],
]


def catalan(k):
    out = 1
    for i in range(k):
        out = out * 2 * (2 * i + 1) // (i + 2)
    return out


def cone_over(points):
    return Configuration(tuple((1,) + tuple(p) for p in points))


@pytest.fixture(scope="module")
def dual_rect():
    return gale_dual(fixture("rect2x1")).configuration


@pytest.fixture(scope="module")
def tri_rect(dual_rect):
    return all_triangulations(dual_rect)


def test_counts_for_rectangle_dual(tri_rect):
    flags = [is_regular(T)[0] for T in tri_rect]
    assert len(tri_rect) == 18 and sum(flags) == 16
    assert len(set(tri_rect)) == 18
    bad = sorted(T.to_json() for T, ok in zip(tri_rect, flags) if not ok)
    assert bad == sorted(NONREGULAR_RECT)


@pytest.mark.parametrize("pts", [
    [(0, 0), (2, 0), (3, 2), (1, 3), (-1, 1)],
    [(0, 0), (2, 0), (3, 1), (2, 3), (0, 3), (-1, 1)],
    [(0, 0), (3, 0), (5, 2), (4, 4), (1, 5), (-1, 3), (-1, 1)],
])
def test_convex_polygon_count_is_catalan(pts):
    C = cone_over(pts)
    Ts = all_triangulations(C)
    assert len(Ts) == catalan(len(pts) - 2)
    assert all(is_regular(T)[0] for T in Ts)


def test_cells_are_bases_and_pairwise_proper(tri_rect, dual_rect):
    vecs = dual_rect.vectors
    for T in tri_rect:
        cells = T.maximalCells
        assert all(det([vecs[i] for i in c]) != 0 for c in cells)
        for s, t in itertools.combinations(cells, 2):
            assert intersect_properly(vecs, s, t)


def test_circuits_are_minimal_dependencies():
    vecs = fixture("rect2x1").vectors
    for pos, neg in circuits(vecs):
        supp = [i for i in range(len(vecs)) if (pos | neg) >> i & 1]
        sub = [vecs[i] for i in supp]
        # dependent, but every proper subset is independent
        from supernormal.lattice import rank

        assert rank(sub) == len(sub) - 1
        for k in range(len(sub)):
            assert rank(sub[:k] + sub[k + 1:]) == len(sub) - 1


def test_regular_liftings_round_trip(tri_rect, dual_rect):
    for T in tri_rect:
        ok, c = is_regular(T)
        if ok:
            assert regular_subdivision(dual_rect, c).cells == T.cells


def test_random_liftings_find_exactly_the_regular_ones(tri_rect, dual_rect):
    rng = random.Random(11)
    seen = set()
    for _ in range(3000):
        c = [rng.randint(-20, 20) for _ in range(dual_rect.n)]
        try:
            S = regular_subdivision(dual_rect, c)
        except EmptyPolyhedron:
            continue
        if S.is_triangulation:
            seen.add(S.cells)
    regular = {T.cells for T in tri_rect if is_regular(T)[0]}
    assert seen <= regular
    assert seen == regular


def test_refinement_of_coarse_subdivision():
    B = fixture("quadrilateral")
    S = regular_subdivision(B, [0] * B.n)
    assert not S.is_triangulation
    T = refine_to_triangulation(S)
    assert T.is_triangulation
    for cell in T.cells:
        assert any(cell <= big for big in S.cells)
    assert T in all_triangulations(B)


def test_unimodular_triangulations_of_supernormal_sets():
    # every triangulation using all vectors is unimodular exactly when the set is supernormal
    for name, expect in (("rect2x1", True), ("unit_square", True), ("hilbert3d", False), ("hilbert3d+", True)):
        Ts = all_triangulations(fixture(name), uses_all_vectors=True)
        assert all(is_unimodular(T) for T in Ts) == expect
