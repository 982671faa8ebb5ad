"""Named configurations used throughout the tests and the command line."""
from __future__ import annotations

import itertools
from fractions import Fraction

from .lattice import Configuration

CATALOG_VERSION = 1


def _cols(rows) -> Configuration:
    return Configuration.from_columns(rows)


def halving_sequence(k: int) -> list[tuple[int, int, int]]:
    """``P_0 .. P_k``; from ``P_4`` on each is half the sum of ``P_{i-2}, P_{i-1}, P_{i mod 2}``."""
    P = [(-1, 1, 2), (1, -1, 1), (0, 1, 0), (1, 0, 0)]
    for i in range(4, k + 1):
        s = [Fraction(a + b + c, 2) for a, b, c in zip(P[i - 2], P[i - 1], P[i % 2])]
        if any(x.denominator != 1 for x in s):
            raise ArithmeticError("recursion left the lattice")
        P.append(tuple(int(x) for x in s))
    return P[: k + 1]


def halving_closed_form(i: int) -> tuple[int, int, int]:
    j, r = divmod(i, 2)
    return (0, 1, j - 1) if r == 0 else (1, 0, j - 1)


_CUBE = [
    [1, 1, 1, 1, 1, 1, 1, 1],
    [0, 1, 0, 1, 0, 1, 0, 1],
    [0, 0, 1, 1, 0, 0, 1, 1],
    [0, 0, 0, 0, 1, 1, 1, 1],
]

_FIXTURES = {
    "b_neg2_3": (lambda: Configuration(((-2,), (3,)), name="b_neg2_3"),
                 "B = {-2, 3}: normal, not supernormal"),
    "b_2_3": (lambda: Configuration(((2,), (3,)), name="b_2_3"),
              "B = {2, 3}: pointed, neither normal nor supernormal"),
    "dim2_nonsuper": (lambda: Configuration(((1, 0), (1, 2), (0, 1)), name="dim2_nonsuper"),
                      "pointed and normal in the plane, not supernormal"),
    "hilbert3d": (lambda: Configuration(((1, 0, 0), (0, 1, 0), (1, 1, 1), (1, 1, 2), (1, 2, 3), (1, 2, 4)),
                                        name="hilbert3d"),
                  "Hilbert basis of cone((1,0,0),(0,1,0),(1,2,4)); not supernormal"),
    "hilbert3d+": (lambda: Configuration(((1, 0, 0), (0, 1, 0), (1, 1, 1), (1, 1, 2), (1, 2, 3), (1, 2, 4),
                                          (1, 2, 2)), name="hilbert3d+"),
                   "hilbert3d plus (1,2,2): supernormal"),
    "cube27": (lambda: Configuration(tuple(v for v in itertools.product((-1, 0, 1), repeat=3) if any(v)),
                                     name="cube27"),
               "the 26 nonzero vectors of {-1,0,1}^3: supernormal"),
    "cube4": (lambda: Configuration(_cols(_CUBE).vectors, name="cube4"),
              "cone over the 3-cube: not supernormal, missing (2,1,1,1)"),
    "cube4+": (lambda: Configuration(_cols(_CUBE).vectors + ((2, 1, 1, 1),), name="cube4+"),
               "cone over the 3-cube plus its centroid: supernormal"),
    "halving": (lambda: Configuration(tuple(halving_sequence(3)), name="halving"),
              "P_0..P_3 spanning a cone with no finite supernormal generating set"),
    "quadrilateral": (lambda: Configuration(_cols([
        [1, 1, 1, 1, 1, 1, 1, 1],
        [1, 0, 1, 2, 3, 1, 2, 2],
        [0, 1, 1, 1, 1, 2, 2, 3],
    ]).vectors, name="quadrilateral"),
               "cone over the quadrilateral (1,0),(0,1),(2,3),(3,1)"),
    "rect2x1": (lambda: Configuration(_cols([
        [1, 1, 1, 1, 1, 1],
        [0, 1, 2, 0, 1, 2],
        [0, 0, 0, 1, 1, 1],
    ]).vectors, name="rect2x1"),
               "cone over the 2x1 rectangle; 18 virtual chambers"),
    "unit_square": (lambda: Configuration(((1, 0, 0), (1, 1, 0), (1, 0, 1), (1, 1, 1)), name="unit_square"),
                    "cone over the unit square"),
}


def fixture(name: str) -> Configuration:
    try:
        return _FIXTURES[name][0]()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; try one of {', '.join(sorted(_FIXTURES))}") from None


def fixture_names() -> list[str]:
    return sorted(_FIXTURES)


def describe(name: str) -> str:
    return _FIXTURES[name][1]
