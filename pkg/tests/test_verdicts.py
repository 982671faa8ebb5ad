import itertools
import random
from math import gcd

import pytest
from hypothesis import assume, given, settings, strategies as st

from supernormal.errors import NoLatticePoint
from supernormal.fixtures import fixture
from supernormal.lattice import Configuration
from supernormal.polyhedra import cone_from, hilbert_basis, polyhedron
from supernormal.verdicts import (ccw_order, check_dim2_criterion, is_normal, is_supernormal, is_TDI, is_tight,
                                  property_test_tight_implies_tdi, tdi_witness, tighten)


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


CATALOG = {
    "b_neg2_3": (True, False),
    "dim2_nonsuper": (True, False),
    "hilbert3d": (True, False),
    "hilbert3d+": (True, True),
    "unit_square": (True, True),
    "rect2x1": (True, True),
    "quadrilateral": (True, True),
    "cube4": (True, False),
    "cube4+": (True, True),
}


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_catalog(name):
    B = fixture(name)
    normal, supernormal = CATALOG[name]
    assert is_normal(B) == normal
    assert is_supernormal(B).verdict == supernormal


def test_b_2_3_is_pointed_but_not_normal():
    B = fixture("b_2_3")
    assert cone_from(B.vectors, 1).is_pointed
    assert not is_normal(B)
    assert not is_supernormal(B).verdict


def test_witnesses():
    assert is_supernormal(fixture("hilbert3d")).witness == (((0, 1, 0), (1, 1, 1), (1, 2, 3)), (1, 2, 2))
    assert is_supernormal(fixture("cube4")).point == (2, 1, 1, 1)
    assert is_supernormal(fixture("dim2_nonsuper")).point == (1, 1)


def test_cube27_supernormal():
    assert is_supernormal(fixture("cube27")).verdict


@pytest.mark.parametrize("name", ["b_neg2_3", "b_2_3", "dim2_nonsuper", "hilbert3d", "hilbert3d+",
                                  "unit_square", "rect2x1", "cube4", "cube4+", "halving"])
def test_methods_agree(name):
    B = fixture(name)
    verdicts = {is_supernormal(B, method=m).verdict for m in ("simplex", "definition")}
    if B.n <= 10 and name not in ("b_2_3",):
        verdicts.add(is_supernormal(B, method="triangulation").verdict)
    assert len(verdicts) == 1


def test_definition_and_simplex_witness_agree():
    B = fixture("hilbert3d")
    d = is_supernormal(B, method="definition")
    assert d.point == (1, 2, 2)


primitive2 = st.tuples(st.integers(-4, 4), st.integers(-4, 4)).filter(lambda v: any(v))


def _distinct_rays(vs):
    prim = set()
    for v in vs:
        g = gcd(*v)
        p = (v[0] // g, v[1] // g)
        if p in prim:
            return False
        prim.add(p)
    return True


@given(st.lists(primitive2, min_size=2, max_size=8, unique=True))
@settings(max_examples=100, deadline=None)
def test_planar_criterion_matches_definition(vs):
    assume(_distinct_rays(vs))
    order = ccw_order(vs)
    B = Configuration(tuple(vs[i] for i in order))
    assert check_dim2_criterion(B) == is_supernormal(B, method="definition").verdict


@given(st.lists(primitive2, min_size=1, max_size=3))
@settings(max_examples=60, deadline=None)
def test_planar_hilbert_bases_are_supernormal(gens):
    C = cone_from(gens, 2)
    assume(C.is_pointed and C.span_dim == 2)
    H = hilbert_basis(C)
    assert is_supernormal(Configuration(H.elements)).verdict


def test_planar_criterion_examples():
    assert not check_dim2_criterion(Configuration(((1, 0), (1, 2), (0, 1))))
    assert check_dim2_criterion(Configuration(((1, 0), (1, 1), (0, 1))))
    # positively spanning: the wrap-around determinant counts
    assert check_dim2_criterion(Configuration(((1, 0), (0, 1), (-1, -1))))
    assert not check_dim2_criterion(Configuration(((1, 0), (0, 1), (-1, -2))))


def brute_tight(B, c, box=15):
    pts = [x for x in itertools.product(*[range(-box, box + 1)] * B.m)
           if all(dot(b, x) <= ci for b, ci in zip(B.vectors, c))]
    if not pts:
        return False
    for i in range(B.n):
        smaller = [x for x in pts if dot(B.vectors[i], x) <= c[i] - 1]
        if len(smaller) == len(pts):
            return False
    return True


SPANNING = Configuration(((1, 0), (0, 1), (-1, -1), (1, 2), (-2, 1)))


@given(st.lists(st.integers(-3, 5), min_size=5, max_size=5))
@settings(max_examples=80, deadline=None)
def test_tightness_matches_definition(c):
    assert is_tight(SPANNING, c).tight == brute_tight(SPANNING, c)


@given(st.lists(st.integers(-3, 5), min_size=5, max_size=5))
@settings(max_examples=40, deadline=None)
def test_tighten_is_tight_and_keeps_points(c):
    rep = is_tight(SPANNING, c)
    if rep.tightenedC is None:
        with pytest.raises(NoLatticePoint):
            tighten(SPANNING, c)
        return
    c2 = tighten(SPANNING, c)
    assert is_tight(SPANNING, c2).tight
    from supernormal.polyhedra import lattice_points

    assert lattice_points(polyhedron(SPANNING, c)) == lattice_points(polyhedron(SPANNING, c2))


def test_tightness_unbounded():
    B = fixture("b_neg2_3")
    assert is_tight(B, (0, 0)).tight
    B = Configuration(((2,), (3,)))
    rep = is_tight(B, (2, 4))
    assert not rep.tight and rep.tightenedC == (2, 3)


def test_tdi_witness_nonsupernormal():
    rep = property_test_tight_implies_tdi(fixture("dim2_nonsuper"), exhaustive_box=3)
    assert rep.witness is not None
    c = rep.witness
    assert is_tight(fixture("dim2_nonsuper"), c).tight and not is_TDI(fixture("dim2_nonsuper"), c)


@pytest.mark.parametrize("name", ["hilbert3d+", "rect2x1", "unit_square"])
def test_tight_implies_tdi_on_supernormal(name):
    rep = property_test_tight_implies_tdi(fixture(name), samples=40, seed=1)
    assert rep.supernormal and rep.tight == 40 and not rep.violations


def test_minimal_faces_match_all_faces():
    B = SPANNING
    rng = random.Random(5)
    for _ in range(40):
        c = [rng.randint(-2, 4) for _ in range(5)]
        if polyhedron(B, c).is_empty:
            continue
        assert (tdi_witness(B, c) is None) == (tdi_witness(B, c, all_faces=True) is None)


def test_tdi_gives_integral_polyhedron():
    B = fixture("hilbert3d+")
    rng = random.Random(7)
    checked = 0
    while checked < 15:
        c = tuple(rng.randint(-3, 3) for _ in range(B.n))
        P = polyhedron(B, c)
        if P.is_empty or not is_TDI(B, c):
            continue
        assert P.is_integral
        checked += 1


def test_one_dimensional_classification():
    # every subset of {-3..3} \ {0} with at most four elements
    vals = [v for v in range(-3, 4) if v]
    for k in range(1, 5):
        for S in itertools.combinations(vals, k):
            B = Configuration(tuple((v,) for v in S))
            expect = (1 in S or max(S) < 0) and (-1 in S or min(S) > 0)
            assert is_supernormal(B).verdict == expect, S
            assert is_supernormal(B, method="definition").verdict == expect, S


def test_supernormal_implies_normal():
    for name in CATALOG:
        B = fixture(name)
        if is_supernormal(B).verdict:
            assert is_normal(B)
