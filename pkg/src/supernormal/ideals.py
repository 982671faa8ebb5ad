"""Binomial Gröbner bases of lattice ideals, initial ideals and monomial ideals.

A generalised binomial is a pair ``(lead, trail)`` of exponent tuples,
standing for ``x^lead - x^trail``; ``trail`` is None for a monomial.
All coefficients are +-1, so no field arithmetic is ever needed.
"""
from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import NonTerminating, NotInCone
from .lattice import Configuration, Vector, coordinates, det, dot, gale_dual, solve
from .polyhedra import cone_from, polyhedron, relevant_lattice_points

Exp = tuple[int, ...]
GBin = tuple[Exp, Exp | None]

MAX_PAIRS = 200_000


# ---------------------------------------------------------------------------
# term orders


@dataclass(frozen=True)
class WeightOrder:
    """Weight ``omega`` refined by lex with ``x1 > x2 > ... > xn``."""

    variableWeights: tuple[Fraction, ...]
    w: tuple[Fraction, ...] | None = None

    def key(self, a: Exp):
        return (sum(o * x for o, x in zip(self.variableWeights, a)), a)

    def weight(self, a: Exp) -> Fraction:
        return sum((o * x for o, x in zip(self.variableWeights, a)), Fraction(0))


def lex_order(n: int) -> WeightOrder:
    return WeightOrder(tuple(Fraction(0) for _ in range(n)))


def weight_order(B: Configuration, w: Sequence) -> WeightOrder:
    """An order whose weight ``omega >= 0`` satisfies ``B omega = w``.

    ``omega`` is supported on the lex-first basis of B whose cone contains w.
    """
    w = tuple(Fraction(x) for x in w)
    m, n = B.m, B.n
    if not cone_from(B.vectors, m).contains(w):
        raise NotInCone("w is not in cone(B)")
    for S in itertools.combinations(range(n), m):
        M = [B.vectors[i] for i in S]
        if det(M) == 0:
            continue
        lam = solve([[M[k][t] for k in range(m)] for t in range(m)], w)
        if all(x >= 0 for x in lam):
            omega = [Fraction(0)] * n
            for i, x in zip(S, lam):
                omega[i] = x
            return WeightOrder(tuple(omega), w)
    raise NotInCone("w is not in cone(B)")


# ---------------------------------------------------------------------------
# the Buchberger engine


def _divides(a: Exp, b: Exp) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _normal(g: tuple[Exp | None, Exp | None], key) -> GBin | None:
    p, q = g
    if p is None and q is None:
        return None
    if p == q:
        return None
    if p is None:
        return (q, None)
    if q is None:
        return (p, None)
    return (p, q) if key(p) > key(q) else (q, p)


class _Reducer:
    def __init__(self, key):
        self.key = key
        self.elems: list[GBin] = []

    def nf(self, t: Exp | None) -> Exp | None:
        while t is not None:
            for a, b in self.elems:
                if _divides(a, t):
                    t = None if b is None else tuple(x - y + z for x, y, z in zip(t, a, b))
                    break
            else:
                return t
        return None


def _strip_gcd(g: GBin) -> GBin:
    a, b = g
    if b is None:
        return g
    c = tuple(min(x, y) for x, y in zip(a, b))
    if any(c):
        return (tuple(x - y for x, y in zip(a, c)), tuple(x - y for x, y in zip(b, c)))
    return g


def buchberger(gens: Iterable[GBin | tuple], key: Callable, saturated: bool = False,
               max_pairs: int = MAX_PAIRS) -> list[GBin]:
    """Reduced Gröbner basis of the ideal generated by ``gens``.

    With ``saturated`` the common factor of the two terms is cancelled, which
    is only valid for ideals saturated with respect to every variable.
    """
    red = _Reducer(key)
    G: list[GBin] = []
    pairs: list = []
    count = 0

    def add(g: GBin):
        nonlocal count
        k = len(G)
        G.append(g)
        red.elems.append(g)
        for i in range(k):
            a1, a2 = G[i][0], g[0]
            if all(x == 0 or y == 0 for x, y in zip(a1, a2)):
                continue  # coprime leads
            l = tuple(max(x, y) for x, y in zip(a1, a2))
            heapq.heappush(pairs, (key(l), count, i, k))
            count += 1

    def reduce_new(p, q):
        g = _normal((red.nf(p), red.nf(q)), key)
        if g is not None and saturated:
            g = _strip_gcd(g)
            g = _normal((red.nf(g[0]), red.nf(g[1])), key)
        return g

    for raw in gens:
        g = reduce_new(raw[0], raw[1])
        if g is not None:
            add(g)
    done = 0
    while pairs:
        _, _, i, k = heapq.heappop(pairs)
        done += 1
        if done > max_pairs:
            raise NonTerminating("Buchberger pair budget exhausted")
        (a1, b1), (a2, b2) = G[i], G[k]
        if a1 is None or a2 is None:
            continue
        l = tuple(max(x, y) for x, y in zip(a1, a2))
        p = None if b2 is None else tuple(x - y + z for x, y, z in zip(l, a2, b2))
        q = None if b1 is None else tuple(x - y + z for x, y, z in zip(l, a1, b1))
        g = reduce_new(p, q)
        if g is not None:
            add(g)
    return _interreduce(G, key)


def _interreduce(G: list[GBin], key) -> list[GBin]:
    leads = [g[0] for g in G]
    keep = []
    for i, g in enumerate(G):
        if any(j != i and _divides(leads[j], g[0]) and (leads[j] != g[0] or j < i) for j in range(len(G))):
            continue
        keep.append(g)
    red = _Reducer(key)
    red.elems = list(keep)
    out = []
    for a, b in keep:
        others = _Reducer(key)
        others.elems = [h for h in keep if h[0] != a]
        nb = None if b is None else others.nf(b)
        out.append((a, nb))
    out.sort(key=lambda g: (sum(g[0]), g[0], g[1] or ()))
    return out


# ---------------------------------------------------------------------------
# lattice ideals


@dataclass(frozen=True)
class LatticeIdeal:
    config: Configuration
    generators: tuple[GBin, ...]
    saturationCertified: bool = True

    @property
    def n(self) -> int:
        return self.config.n


def _split(u: Sequence[int]) -> GBin:
    return (tuple(max(x, 0) for x in u), tuple(max(-x, 0) for x in u))


def _grevlex_key(a: Exp):
    return (sum(a), tuple(-x for x in reversed(a)))


_LATTICE_CACHE: dict = {}


def lattice_ideal(B: Configuration) -> LatticeIdeal:
    """``J_B``: saturate the row binomials by eliminating ``t`` from ``t x1...xn - 1``."""
    if B in _LATTICE_CACHE:
        return _LATTICE_CACHE[B]
    n = B.n
    gens = []
    for row in B.matrix:
        p, q = _split(row)
        gens.append((p + (0,), q + (0,)))
    gens.append(((1,) * (n + 1), (0,) * (n + 1)))

    def key(a):
        return (a[n], _grevlex_key(a[:n]))

    G = buchberger(gens, key)
    out = []
    for a, b in G:
        if a[n] == 0 and (b is None or b[n] == 0):
            out.append((a[:n], None if b is None else b[:n]))
    A = gale_dual(B).matrixA if B.n > B.m else ()
    for a, b in out:
        diff = [x - y for x, y in zip(a, b)]
        assert all(dot(r, diff) == 0 for r in A), "lattice ideal is not A-homogeneous"
    I = LatticeIdeal(B, tuple(out), True)
    _LATTICE_CACHE[B] = I
    return I


@dataclass(frozen=True)
class GroebnerBasis:
    order: WeightOrder
    elements: tuple[GBin, ...]
    reduced: bool = True
    flippableFlags: tuple[bool, ...] = ()


def buchberger_reduced(I: LatticeIdeal, order: WeightOrder) -> GroebnerBasis:
    G = buchberger(I.generators, order.key, saturated=True)
    gb = GroebnerBasis(order, tuple(G))
    flags = groebner_cone(I.config, gb)[1]
    return GroebnerBasis(order, tuple(G), True, tuple(i in flags for i in range(len(G))))


def groebner_basis(B: Configuration, w: Sequence | None = None, omega: Sequence | None = None) -> GroebnerBasis:
    """Reduced Gröbner basis of ``J_B`` for a weight given in w-space or variable space."""
    if omega is not None:
        order = WeightOrder(tuple(Fraction(x) for x in omega),
                            tuple(sum(Fraction(o) * v[t] for o, v in zip(omega, B.vectors)) for t in range(B.m)))
    elif w is not None:
        order = weight_order(B, w)
    else:
        order = lex_order(B.n)
    return buchberger_reduced(lattice_ideal(B), order)


# ---------------------------------------------------------------------------
# initial ideals and Gröbner cones


def initial_forms(gb: GroebnerBasis) -> list[GBin]:
    """``in_omega`` of every element: the binomial itself if both terms tie, else its lead."""
    out = []
    for a, b in gb.elements:
        if b is not None and gb.order.weight(a) == gb.order.weight(b):
            out.append((a, b))
        else:
            out.append((a, None))
    return out


@dataclass(frozen=True)
class InitialIdeal:
    """Generated by ``generators``; monomial when every trail is None."""

    generators: tuple[GBin, ...]

    @property
    def is_monomial(self) -> bool:
        return all(b is None for _, b in self.generators)

    def monomial_ideal(self) -> "MonomialIdeal":
        return MonomialIdeal.from_generators(a for a, _ in self.generators)


def initial_ideal(B: Configuration, w: Sequence) -> InitialIdeal:
    """``in_w(J_B)`` as the reduced lex basis of the initial forms."""
    gb = groebner_basis(B, w=w)
    return InitialIdeal(tuple(initial_forms(gb)))


def reduced_basis(gens: Iterable[GBin | tuple], n: int) -> tuple[GBin, ...]:
    """Reduced lex Gröbner basis of an ideal given by generalised binomials (canonical form)."""
    key = lex_order(n).key
    return tuple(buchberger(gens, key))


def groebner_cone(B: Configuration, gb: GroebnerBasis) -> tuple[list[Vector], set[int]]:
    """Inequalities ``u_g . w >= 0`` of the Gröbner cone in w-space and the flippable elements.

    ``u_g`` solves ``lead - trail = u_g B``. An element is flippable when its
    inequality is a facet and its trail is not 1 (facets with trail 1 lie on
    the boundary of cone(B)).
    """
    ineqs = []
    for a, b in gb.elements:
        bb = b if b is not None else tuple(0 for _ in a)
        diff = [x - y for x, y in zip(a, bb)]
        u = coordinates(B.matrix, diff)
        if u is None or any(x.denominator != 1 for x in u):
            raise ValueError("element is not in the lattice of B")
        ineqs.append(tuple(int(x) for x in u))
    C = cone_from(ineqs, B.m)
    rays = set(C.rays)
    from .lattice import primitive

    flips = set()
    for i, (u, (a, b)) in enumerate(zip(ineqs, gb.elements)):
        if primitive(u) in rays and b is not None and any(b):
            flips.add(i)
    return ineqs, flips


# ---------------------------------------------------------------------------
# monomial ideals


@dataclass(frozen=True)
class MonomialIdeal:
    minimalGenerators: tuple[Exp, ...]

    @classmethod
    def from_generators(cls, gens: Iterable[Sequence[int]]) -> "MonomialIdeal":
        gs = sorted(set(tuple(int(x) for x in g) for g in gens), key=lambda g: (sum(g), g))
        keep = []
        for g in gs:
            if not any(_divides(h, g) for h in keep):
                keep.append(g)
        return cls(tuple(sorted(keep, key=lambda g: (sum(g), g))))

    def contains(self, v: Sequence[int]) -> bool:
        return any(_divides(g, v) for g in self.minimalGenerators)

    def generator_array(self) -> np.ndarray:
        return np.array(self.minimalGenerators, dtype=np.int64).reshape(len(self.minimalGenerators), -1)

    @property
    def n(self) -> int:
        return len(self.minimalGenerators[0]) if self.minimalGenerators else 0


def minimal_primes(M: MonomialIdeal, n: int | None = None) -> list[tuple[int, ...]]:
    """Minimal vertex covers of the generator supports (0-based variable indices)."""
    n = M.n if n is None else n
    supports = [frozenset(i for i, x in enumerate(g) if x) for g in M.minimalGenerators]
    if any(not s for s in supports):
        return []  # the unit ideal has no primes
    out: list[frozenset] = []
    for k in range(n + 1):
        for S in itertools.combinations(range(n), k):
            s = frozenset(S)
            if any(o <= s for o in out):
                continue
            if all(s & sup for sup in supports):
                out.append(s)
    return sorted(tuple(sorted(s)) for s in out)


def _degree_reps(n: int, D: int, A) -> dict:
    """One exponent vector ``u`` with ``|u| <= D`` per degree ``A u``."""
    reps: dict = {}
    for d in range(D + 1):
        for comb in itertools.combinations_with_replacement(range(n), d):
            u = [0] * n
            for i in comb:
                u[i] += 1
            deg = tuple(dot(r, u) for r in A)
            if deg not in reps:
                reps[deg] = tuple(u)
    return reps


@lru_cache(maxsize=20_000)
def fiber(B: Configuration, c: tuple[int, ...]) -> tuple[np.ndarray, np.ndarray]:
    """Relevant exponents ``c - zB`` of the fiber of ``A c`` and the recession shifts, as int64 rows.

    Every fiber exponent is a relevant one plus a nonnegative combination of
    the shifts, and the shifts are nonnegative, so they only ever add factors.
    Column ``i`` has a zero exactly when inequality ``i`` of ``P_c`` is attained.
    """
    P = polyhedron(B, c)
    Bm = np.array(B.vectors, dtype=np.int64)
    Z = np.array(relevant_lattice_points(P), dtype=np.int64).reshape(-1, B.m)
    V = np.array(c, dtype=np.int64)[None, :] - Z @ Bm.T
    R = np.array(P.recession, dtype=np.int64).reshape(-1, B.m)
    S = -(R @ Bm.T)
    S = S[S.any(axis=1)]
    V.setflags(write=False)
    S.setflags(write=False)
    return V, S


def fiber_is_tight(B: Configuration, c: Sequence[int]) -> bool:
    V, _ = fiber(B, tuple(int(x) for x in c))
    return bool(len(V)) and bool((V == 0).any(axis=0).all())


def _in_ideal(M: "MonomialIdeal", V: np.ndarray) -> np.ndarray:
    if not M.minimalGenerators or len(V) == 0:
        return np.zeros(len(V), dtype=bool)
    G = M.generator_array()
    return (V[:, None, :] >= G[None, :, :]).all(axis=2).any(axis=1)


def standard_monomials_in_fiber(M: MonomialIdeal, B: Configuration, c: Sequence[int]) -> tuple[list[Exp], bool]:
    """Standard monomials among the relevant exponents of the fiber of ``c``.

    The flag says whether every recession shift of a standard monomial lands
    in ``M``, in which case the list is the complete set of standard
    monomials of that degree.
    """
    V, S = fiber(B, tuple(int(x) for x in c))
    std = V[~_in_ideal(M, V)]
    closed = True
    for t in S:
        if not _in_ideal(M, std + t[None, :]).all():
            closed = False
    return sorted(tuple(int(x) for x in v) for v in std), closed


def is_A_graded(M: MonomialIdeal, B: Configuration, D: int) -> bool:
    """Exactly one standard monomial in every degree ``A u`` with ``|u| <= D``."""
    return A_graded_failure(M, B, D) is None


def A_graded_failure(M: MonomialIdeal, B: Configuration, D: int):
    """First degree representative ``u`` whose fiber breaks A-gradedness, or None."""
    if D < 1:
        raise ValueError("degree bound must be at least 1")
    A = gale_dual(B).matrixA if B.n > B.m else ()
    for deg, u in sorted(_degree_reps(B.n, D, A).items(), key=lambda kv: (sum(kv[1]), kv[1])):
        std, closed = standard_monomials_in_fiber(M, B, u)
        if len(std) != 1 or not closed:
            return u
    return None


# ---------------------------------------------------------------------------
# printing


def variable_names(n: int) -> list[str]:
    return ["x", "y", "z"][:n] if n <= 3 else [f"x{i + 1}" for i in range(n)]


def format_monomial(a: Exp | None, names: Sequence[str]) -> str:
    if a is None:
        return "0"
    parts = []
    for x, nm in zip(a, names):
        if x == 1:
            parts.append(nm)
        elif x > 1:
            parts.append(f"{nm}^{x}")
    return "*".join(parts) if parts else "1"


def format_binomial(g: GBin, names: Sequence[str]) -> str:
    a, b = g
    if b is None:
        return format_monomial(a, names)
    return f"{format_monomial(a, names)} - {format_monomial(b, names)}"


def parse_binomial(text: str, names: Sequence[str]) -> GBin:
    """Inverse of :func:`format_binomial`."""
    n = len(names)
    idx = {nm: i for i, nm in enumerate(names)}

    def mono(s):
        s = s.strip()
        e = [0] * n
        if s == "1":
            return tuple(e)
        for f in s.split("*"):
            f = f.strip()
            if "^" in f:
                v, p = f.split("^")
                e[idx[v.strip()]] += int(p)
            else:
                e[idx[f]] += 1
        return tuple(e)

    if " - " in text:
        l, r = text.split(" - ")
        return (mono(l), mono(r))
    return (mono(text), None)
