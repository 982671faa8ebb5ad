"""Command line front end.

Exit codes: 0 when a check holds (or a command succeeds), 1 when a check
fails, 2 on errors.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import fixtures
from .errors import SupernormalError
from .io import dumps, parse_polygon, read_configuration


def _config(args):
    if getattr(args, "fixture", None):
        return fixtures.fixture(args.fixture)
    if getattr(args, "matrix", None):
        return read_configuration(args.matrix)
    raise SupernormalError("give --fixture NAME or --matrix TEXT|FILE")


def _ints(text: str) -> list[int]:
    return [int(t) for t in text.replace(",", " ").split()]


def _fracs(text: str) -> list[Fraction]:
    return [Fraction(t) for t in text.replace(",", " ").split()]


def _add_input(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--fixture", help="named configuration (see 'fixtures list')")
    g.add_argument("--matrix", help="matrix text ('m n' header, rows separated by newlines or '@'), JSON or a file")


def _one_based(cells):
    return [[i + 1 for i in c] for c in cells]


# ---------------------------------------------------------------------------


def cmd_check(args) -> int:
    from .verdicts import is_supernormal, is_tight, normal_witness, tdi_witness

    B = _config(args)
    out = {"kind": args.kind, "configuration": [list(v) for v in B.vectors]}
    if args.kind == "normal":
        ok, w = normal_witness(B.vectors, B.m)
        out.update(verdict=ok, witness=w)
    elif args.kind == "supernormal":
        rep = is_supernormal(B, method=args.method)
        ok = rep.verdict
        out.update(verdict=ok, method=rep.method,
                   witness=None if rep.subset is None else {"subset": rep.subset, "point": rep.point})
    else:
        if not args.c:
            raise SupernormalError(f"check {args.kind} needs --c")
        c = _ints(args.c)
        if args.kind == "tight":
            rep = is_tight(B, c)
            ok = rep.tight
            out.update(verdict=ok, c=c, slack=[i + 1 for i in rep.slackIndices], tightened=rep.tightenedC)
        else:
            w = tdi_witness(B, c, all_faces=args.all_faces)
            ok = w is None
            out.update(verdict=ok, c=c, witness=None if w is None else [i + 1 for i in w])
    print(dumps(out))
    return 0 if ok else 1


def cmd_hilbert(args) -> int:
    from .polyhedra import cone_from, hilbert_basis

    B = _config(args)
    H = hilbert_basis(cone_from(B.vectors, B.m))
    print(dumps({"hilbert_basis": H.elements}))
    return 0


def cmd_gale(args) -> int:
    from .lattice import gale_dual

    G = gale_dual(_config(args))
    print(dumps({"A": G.matrixA}))
    return 0


def cmd_triangulations(args) -> int:
    from .lattice import gale_dual
    from .triangulations import all_triangulations, is_regular

    B = _config(args)
    if args.dual:
        B = gale_dual(B).configuration
    Ts = all_triangulations(B, uses_all_vectors=args.all_vectors)
    rows = []
    for T in Ts:
        ok, _ = is_regular(T)
        rows.append({"cells": T.to_json(), "regular": ok})
    print(dumps({"count": len(rows), "regular": sum(r["regular"] for r in rows), "triangulations": rows}))
    return 0


def cmd_chambers(args) -> int:
    from .chambers import chamber_complex

    CC = chamber_complex(_config(args))
    print(dumps({
        "chambers": len(CC.maximalChambers),
        "faces_by_edges": CC.census,
        "signatures": [_one_based(ch.subsets) for ch in CC.maximalChambers],
    }))
    return 0


def cmd_polygon(args) -> int:
    from .chambers import LatticePolygon, emit_svg, polygon_chamber_complex

    if args.rect:
        P = LatticePolygon.rectangle(*args.rect)
    elif args.vertices:
        P = LatticePolygon.from_vertices(parse_polygon(args.vertices))
    else:
        raise SupernormalError("give --rect A B or --vertices")
    pcc = polygon_chamber_complex(P, max_points=args.max_points, unsafe_large=args.unsafe_large)
    if args.sub == "mu":
        print(pcc.mu)
    elif args.sub == "chambers":
        print(dumps(pcc.to_json()))
    else:
        svg = emit_svg(pcc)
        if args.output and args.output != "-":
            with open(args.output, "w") as fh:
                fh.write(svg)
        else:
            sys.stdout.write(svg)
    return 0


def _order_args(args):
    if args.omega:
        return {"omega": _fracs(args.omega)}
    if args.w:
        return {"w": _fracs(args.w)}
    return {}


def cmd_gb(args) -> int:
    from .ideals import format_binomial, groebner_basis, variable_names

    B = _config(args)
    gb = groebner_basis(B, **_order_args(args))
    names = variable_names(B.n)
    if args.json:
        print(dumps({"elements": [{"lead": a, "trail": b, "flippable": f}
                                  for (a, b), f in zip(gb.elements, gb.flippableFlags)]}))
        return 0
    for g, f in zip(gb.elements, gb.flippableFlags):
        print(format_binomial(g, names) + ("  [flippable]" if f else ""))
    print(f"# {len(gb.elements)} binomials, {sum(gb.flippableFlags)} flippable")
    return 0


def cmd_initial(args) -> int:
    from .ideals import format_binomial, initial_ideal, variable_names

    B = _config(args)
    if not args.w:
        raise SupernormalError("initial needs --w")
    I = initial_ideal(B, _fracs(args.w))
    names = variable_names(B.n)
    for g in I.generators:
        print(format_binomial(g, names))
    if I.is_monomial:
        from .ideals import minimal_primes

        print("# minimal primes: " + " ".join("".join(str(i + 1) for i in p) if B.n < 10 else
                                             ",".join(str(i + 1) for i in p)
                                             for p in minimal_primes(I.monomial_ideal(), B.n)))
    return 0


def cmd_virtual(args) -> int:
    from .virtual import verify_bijection, virtual_chambers

    B = _config(args)
    if args.list:
        print(dumps([{"cells": vc.to_json(), "regular": vc.regular} for vc in virtual_chambers(B)]))
        return 0
    rep = verify_bijection(B, args.degree)
    print(rep)
    return 0 if rep.ok else 1


def cmd_fixtures(args) -> int:
    for name in fixtures.fixture_names():
        B = fixtures.fixture(name)
        print(f"{name:14s} m={B.m} n={B.n:<3d} {fixtures.describe(name)}")
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="supernormal", description="Supernormal vector configurations")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="normality, supernormality, tightness or TDI")
    c.add_argument("kind", choices=["normal", "supernormal", "tight", "tdi"])
    _add_input(c)
    c.add_argument("--c", help="right-hand side for tight/tdi")
    c.add_argument("--method", default="simplex", choices=["simplex", "definition", "triangulation"])
    c.add_argument("--all-faces", action="store_true", help="tdi: test every face, not only minimal ones")
    c.set_defaults(func=cmd_check)

    for name, fn, hlp in (("hilbert", cmd_hilbert, "Hilbert basis of cone(B)"),
                          ("gale", cmd_gale, "Gale dual matrix")):
        q = sub.add_parser(name, help=hlp)
        _add_input(q)
        q.set_defaults(func=fn)

    t = sub.add_parser("triangulations", help="all triangulations with regularity")
    _add_input(t)
    t.add_argument("--all-vectors", action="store_true", help="only triangulations using every vector")
    t.add_argument("--dual", action="store_true", help="triangulate the Gale dual instead")
    t.set_defaults(func=cmd_triangulations)

    ch = sub.add_parser("chambers", help="chamber complex (m <= 3)")
    _add_input(ch)
    ch.set_defaults(func=cmd_chambers)

    pg = sub.add_parser("polygon", help="chamber complex of a lattice polygon")
    pg.add_argument("sub", choices=["chambers", "mu", "svg"])
    pg.add_argument("--rect", nargs=2, type=int, metavar=("A", "B"))
    pg.add_argument("--vertices", help='"x y, x y, ..." or JSON or a file')
    pg.add_argument("-o", "--output")
    pg.add_argument("--max-points", type=int, default=120)
    pg.add_argument("--unsafe-large", action="store_true")
    pg.set_defaults(func=cmd_polygon)

    for name, fn in (("gb", cmd_gb), ("initial", cmd_initial)):
        q = sub.add_parser(name, help="reduced Gröbner basis" if name == "gb" else "initial ideal in_w")
        _add_input(q)
        q.add_argument("--w", help="weight in the span of B (w = B omega)")
        if name == "gb":
            q.add_argument("--omega", help="weight on the variables")
            q.add_argument("--json", action="store_true")
        else:
            q.set_defaults(omega=None)
        q.set_defaults(func=fn)

    v = sub.add_parser("virtual", help="virtual chambers and the bijection with virtual initial ideals")
    _add_input(v)
    v.add_argument("--degree", type=int, default=8)
    v.add_argument("--list", action="store_true", help="only list the virtual chambers")
    v.set_defaults(func=cmd_virtual)

    f = sub.add_parser("fixtures", help="named configurations")
    f.add_argument("action", choices=["list"])
    f.set_defaults(func=cmd_fixtures)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SupernormalError, KeyError, ValueError, ArithmeticError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
