"""Virtual chambers, sections of the projection onto cone(A), and virtual initial ideals."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import NoLatticePoint, NotAGraded, NotATriangulation, PointOutsideCone
from .ideals import MonomialIdeal, fiber, fiber_is_tight, is_A_graded, minimal_primes
from .lattice import Configuration, gale_dual, solve, transpose
from .triangulations import Triangulation, all_triangulations, is_regular

Cell = tuple[int, ...]


@dataclass(frozen=True)
class VirtualChamber:
    """Cells are the complements of the maximal cells of a triangulation of the Gale dual."""

    config: Configuration
    cells: tuple[Cell, ...]
    regular: bool

    @property
    def dual_cells(self) -> tuple[Cell, ...]:
        n = self.config.n
        return tuple(sorted(tuple(i for i in range(n) if i not in c) for c in self.cells))

    def to_json(self) -> list[list[int]]:
        return [[i + 1 for i in c] for c in self.cells]


def _complement(cells: Iterable[Iterable[int]], n: int) -> tuple[Cell, ...]:
    return tuple(sorted(tuple(i for i in range(n) if i not in set(c)) for c in cells))


def _dual_configuration(B: Configuration) -> Configuration:
    return gale_dual(B).configuration


@lru_cache(maxsize=32)
def virtual_chambers(B: Configuration) -> tuple[VirtualChamber, ...]:
    """One virtual chamber per triangulation of the Gale dual, with its regularity."""
    n, m = B.n, B.m
    if n == m:
        return (VirtualChamber(B, (tuple(range(n)),), True),)
    A = _dual_configuration(B)
    out = []
    for T in all_triangulations(A):
        ok, _ = is_regular(T)
        out.append(VirtualChamber(B, _complement(T.maximalCells, n), ok))
    return tuple(sorted(out, key=lambda vc: vc.cells))


def chamber_cone_of(vc: VirtualChamber):
    """``cap cone(cell)`` over the cells; full-dimensional exactly for regular virtual chambers."""
    from .polyhedra import cone_from_inequalities, cone_from

    H = []
    m = vc.config.m
    for c in vc.cells:
        H.extend(cone_from([vc.config.vectors[i] for i in c], m).facets)
    return cone_from_inequalities(H, m)


# ---------------------------------------------------------------------------
# sections


@dataclass(frozen=True)
class Section:
    """``s(b)``: the nonnegative ``u`` with ``A u = b`` supported on a cell of the triangulation."""

    A: Configuration
    cells: tuple[Cell, ...]

    def __call__(self, b: Sequence) -> tuple[Fraction, ...]:
        n, k = self.A.n, self.A.m
        b = [Fraction(x) for x in b]
        if k == 0:
            return tuple(Fraction(0) for _ in range(n))
        for cell in self.cells:  # lex-least containing cell
            M = [self.A.vectors[i] for i in cell]
            lam = solve(transpose(M, k), b)
            if lam is not None and all(x >= 0 for x in lam):
                u = [Fraction(0)] * n
                for i, x in zip(cell, lam):
                    u[i] = x
                return tuple(u)
        raise PointOutsideCone("b is not in cone(A)")

    def in_image(self, u: Sequence[int]) -> bool:
        """For ``u >= 0``: ``s(Au) = u`` iff the support of ``u`` lies in a cell."""
        supp = {i for i, x in enumerate(u) if x}
        return any(supp <= set(c) for c in self.cells)


def section_from_triangulation(T: Triangulation) -> Section:
    return Section(T.config, tuple(T.maximalCells))


def section_of(vc: VirtualChamber) -> Section:
    return Section(_dual_configuration(vc.config), vc.dual_cells)


# ---------------------------------------------------------------------------
# virtual initial ideals


@dataclass(frozen=True)
class VirtualInitialIdeal:
    M: MonomialIdeal
    certifiedToDegree: int
    sourceChamber: VirtualChamber | None = None


def _monomials(n: int, D: int):
    for d in range(D + 1):
        for comb in itertools.combinations_with_replacement(range(n), d):
            u = [0] * n
            for i in comb:
                u[i] += 1
            yield tuple(u)


def _tight(B: Configuration, c: tuple[int, ...]) -> bool:
    return fiber_is_tight(B, c)


def virtual_initial_ideal(vc: VirtualChamber, D: int, check: bool = True) -> VirtualInitialIdeal:
    """Minimal monomials ``x^c``, ``|c| <= D``, with ``P_c`` tight and ``c`` off the image of the section."""
    if D < 1:
        raise ValueError("degree bound must be at least 1")
    B = vc.config
    n = B.n
    if n == B.m:
        return VirtualInitialIdeal(MonomialIdeal(()), D, vc)  # J_B = 0
    s = section_of(vc)
    gens: list[tuple[int, ...]] = []
    for c in _monomials(n, D):
        if any(all(g[i] <= c[i] for i in range(n)) for g in gens):
            continue
        if s.in_image(c) or not _tight(B, c):
            continue
        gens.append(c)
    M = MonomialIdeal.from_generators(gens)
    if check and not is_A_graded(M, B, D):
        raise NotAGraded(f"ideal is not A-graded up to degree {D}")
    return VirtualInitialIdeal(M, D, vc)


def chamber_from_ideal(I: VirtualInitialIdeal | MonomialIdeal, B: Configuration | None = None,
                       validate: bool = True) -> VirtualChamber:
    """Read the virtual chamber off the minimal primes."""
    if isinstance(I, VirtualInitialIdeal):
        M = I.M
        B = B or (I.sourceChamber.config if I.sourceChamber else None)
    else:
        M = I
    if B is None:
        raise ValueError("configuration needed")
    if not M.minimalGenerators:
        cells = (tuple(range(B.n)),)
    else:
        cells = tuple(minimal_primes(M, B.n))
    for vc in virtual_chambers(B):
        if vc.cells == cells:
            return vc
    if validate:
        raise NotATriangulation("minimal primes do not come from a triangulation of the Gale dual")
    return VirtualChamber(B, cells, False)


@dataclass(frozen=True)
class BijectionReport:
    chambers: int
    ideals: int
    regular: int
    roundTrips: int
    failures: tuple[Cell, ...]

    @property
    def ok(self) -> bool:
        return self.chambers == self.ideals == self.roundTrips and not self.failures

    def __str__(self):
        return f"{self.chambers} chambers, {self.ideals} ideals, bijection {'OK' if self.ok else 'FAILED'}"


def verify_bijection(B: Configuration, D: int) -> BijectionReport:
    vcs = virtual_chambers(B)
    ideals = {}
    trips = 0
    failures = []
    for vc in vcs:
        try:
            I = virtual_initial_ideal(vc, D)
            back = chamber_from_ideal(I, B)
        except (NotAGraded, NotATriangulation):
            failures.append(vc.cells)
            continue
        ideals[I.M.minimalGenerators] = vc
        if back == vc:
            trips += 1
        else:
            failures.append(vc.cells)
    return BijectionReport(len(vcs), len(ideals), sum(vc.regular for vc in vcs), trips, tuple(failures))


# ---------------------------------------------------------------------------
# gcd stripping


def fiber_gcd(B: Configuration, c: Sequence[int]) -> tuple[int, ...]:
    """Exponent of the gcd of all monomials in the degree of ``x^c``."""
    V, _ = fiber(B, tuple(int(x) for x in c))
    if not len(V):
        raise NoLatticePoint("empty fiber")
    return tuple(int(x) for x in V.min(axis=0))


@dataclass(frozen=True)
class DivisibilityReport:
    checked: int
    violations: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_gcd_divisibility(B: Configuration, pairs: Iterable[tuple[Sequence[int], Sequence[int]]]) -> DivisibilityReport:
    """For ``x^u | x^v``: the gcd-stripped ``x^(u-w)`` divides ``x^(v-w')``."""
    bad = []
    k = 0
    for u, v in pairs:
        u, v = tuple(u), tuple(v)
        if any(a > b for a, b in zip(u, v)):
            raise ValueError("pairs must satisfy u <= v")
        w, w2 = fiber_gcd(B, u), fiber_gcd(B, v)
        k += 1
        if any(a - x > b - y for a, x, b, y in zip(u, w, v, w2)):
            bad.append((u, v))
    return DivisibilityReport(k, tuple(bad))


def random_divisible_pairs(n: int, degree: int, count: int, seed: int = 0) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        v = [0] * n
        for _ in range(rng.randint(0, degree)):
            v[rng.randrange(n)] += 1
        u = [rng.randint(0, x) for x in v]
        out.append((tuple(u), tuple(v)))
    return out
