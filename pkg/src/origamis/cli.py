"""Command-line front end: every subcommand prints JSON on stdout.

Exit codes: 0 success, 1 input error, 2 internal assertion failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import catalog as cat
from .action import orbit
from .cylinders import decomposition_in_direction, horizontal_decomposition
from .flow import FlowState, discrepancy, trace
from .lshape import (
    LSurface,
    absolute_period_lattice,
    horizontal_cylinders,
    lshape_stratum,
    trace_field,
    twist_powers,
    veech_generators,
)
from .origami import genus, is_reduced, parse_origami, stratum, stratum_dim_abelian, stratum_dim_quadratic
from .quadfield import QuadNum


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _parse_dir(text: str) -> tuple[int, int]:
    try:
        p, q = (int(t) for t in text.split(","))
    except ValueError:
        raise ValueError(f"bad direction {text!r}, expected p,q") from None
    return p, q


def _parse_start(text: str):
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"bad start {text!r}, expected sq:x:y")
    return int(parts[0]), Fraction(parts[1]), Fraction(parts[2])


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _cmd_info(args) -> None:
    o = parse_origami(args.origami)
    _emit(
        {
            "n": o.n,
            "h": str(o.h),
            "v": str(o.v),
            "genus": genus(o),
            "stratum": str(stratum(o)),
            "reduced": is_reduced(o),
        }
    )


def _cmd_orbit(args) -> None:
    o = parse_origami(args.origami)
    rep = orbit(o)
    _emit(
        {
            "index": rep.index,
            "cusps": [{"width": c.width, "cylinders": c.cylinder_count} for c in rep.cusps],
            "e2": rep.e2,
            "e3": rep.e3,
            "genus": rep.curve_genus,
            "input_reduced": rep.input_reduced,
        }
    )


def _cmd_cylinders(args) -> None:
    o = parse_origami(args.origami)
    p, q = _parse_dir(args.dir)
    if (p, q) == (1, 0):
        cyls = horizontal_decomposition(o)
        lengths = [str(c.width) for c in cyls]
    else:
        dd = decomposition_in_direction(o, p, q)
        cyls = dd.cylinders
        lengths = [str(length) for length in dd.lengths]
    _emit(
        [
            {"width": c.width, "height": c.height, "length": s}
            for c, s in zip(cyls, lengths)
        ]
    )


def _cmd_flow(args) -> None:
    if args.origami == "discrepancy":
        if args.discrepancy_origami is None:
            raise ValueError("usage: flow discrepancy <origami> --slope S --crossings N --grid G")
        o = parse_origami(args.discrepancy_origami)
        _emit(discrepancy(o, args.slope, args.crossings, args.grid))
        return
    o = parse_origami(args.origami)
    p, q = _parse_dir(args.dir)
    sq, x, y = _parse_start(args.start)
    res = trace(o, FlowState(sq, (x, y), (Fraction(p), Fraction(q))), max_crossings=args.max)
    out = {"periodic": res.periodic, "singular": res.singular, "crossings": res.crossings}
    if res.periodic:
        out["length"] = str(res.length())
    _emit(out)


def _cmd_lshape(args) -> None:
    shift = QuadNum.parse(args.shift) if args.shift else 0
    L = LSurface.from_discriminant(args.d, shift)
    A, B = veech_generators(L)
    tf = trace_field(L)
    lat = absolute_period_lattice(L)
    _emit(
        {
            "a": str(L.a),
            "shift": str(L.shift),
            "stratum": str(lshape_stratum(L)),
            "cylinders": [
                {"width": str(c.width), "height": str(c.height)} for c in horizontal_cylinders(L)
            ],
            "generators": {"A": str(A), "B": str(B)},
            "twist_powers": list(twist_powers(L, 4 * L.a)),
            "trace": str(tf.generator_trace),
            "field": tf.field,
            "degree": tf.degree,
            "period_lattice": {"denominator": lat.denominator, "basis": [list(r) for r in lat.basis]},
        }
    )


def _entry_dict(e: cat.CatalogEntry) -> dict:
    return {
        "origami": e.origami,
        "n": e.n,
        "genus": e.genus,
        "stratum": e.stratum,
        "reduced": e.reduced,
        "orbit_id": e.orbit_id,
        "index": e.index,
        "cusp_widths": list(e.cusp_widths),
        "curve_genus": e.curve_genus,
    }


def _cmd_enumerate(args) -> None:
    entries = cat.enumerate_origamis(
        args.n,
        stratum_filter=args.stratum,
        reduced_only=args.reduced,
        bound=args.bound,
    )
    _emit([_entry_dict(e) for e in entries])


def _cmd_catalog(args) -> None:
    if args.mode == "write":
        if args.n is None:
            raise ValueError("catalog write needs --n")
        entries = cat.enumerate_origamis(args.n, stratum_filter=args.stratum, reduced_only=args.reduced)
        written, skipped = cat.catalog_write(args.path, entries)
        _emit({"written": written, "skipped": skipped})
    else:
        entries = cat.catalog_query(args.path, n=args.n, stratum_filter=args.stratum, orbit_id=args.orbit_id)
        _emit([_entry_dict(e) for e in entries])


def _cmd_strata_dim(args) -> None:
    orders = [int(t) for t in args.orders.split(",")] if args.orders else []
    total = sum(orders)
    if args.kind == "abelian":
        if total % 2:
            raise ValueError(f"abelian orders must sum to an even number, got {total}")
        _emit(stratum_dim_abelian(orders, 1 + total // 2))
    else:
        if total % 4:
            raise ValueError(f"quadratic orders must sum to 4g-4, got {total}")
        _emit(stratum_dim_quadratic(orders, 1 + total // 4))


def build_parser() -> _Parser:
    parser = _Parser(prog="origamis", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="intrinsic invariants of an origami")
    p.add_argument("origami", help="text form: 'n; h=<perm>; v=<perm>'")
    p.set_defaults(func=_cmd_info)

    p = sub.add_parser("orbit", help="SL2(Z)-orbit, cusps and Teichmüller curve data")
    p.add_argument("origami")
    p.set_defaults(func=_cmd_orbit)

    p = sub.add_parser("cylinders", help="cylinder decomposition in a rational direction")
    p.add_argument("origami")
    p.add_argument("--dir", default="1,0", help="direction p,q (default horizontal)")
    p.set_defaults(func=_cmd_cylinders)

    p = sub.add_parser("flow", help="exact straight-line flow; or 'flow discrepancy <origami>'")
    p.add_argument("origami", help="origami text, or the literal 'discrepancy'")
    p.add_argument("discrepancy_origami", nargs="?", default=None)
    p.add_argument("--dir", default="0,1")
    p.add_argument("--start", default="1:0:1/2", help="sq:x:y with exact fractions")
    p.add_argument("--max", type=int, default=10_000)
    p.add_argument("--slope", type=float, default=1.6180339887498949)
    p.add_argument("--crossings", type=int, default=100_000)
    p.add_argument("--grid", type=int, default=10)
    p.set_defaults(func=_cmd_flow)

    p = sub.add_parser("lshape", help="L(a,1) with a=(1+sqrt(d))/2: cylinders, Veech data, trace field")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--shift", default=None, help="exact shift, e.g. '1/3' or '-1/2 + 1/2*sqrt(2)'")
    p.set_defaults(func=_cmd_lshape)

    p = sub.add_parser("enumerate", help="all n-square origamis up to relabeling, grouped into orbits")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--stratum", default=None, help="filter, e.g. 'H(2)'")
    p.add_argument("--reduced", action="store_true", help="keep only primitive (reduced) origamis")
    p.add_argument("--bound", type=int, default=cat.DEFAULT_BOUND)
    p.add_argument("--json", action="store_true", help="accepted for compatibility; output is always JSON")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("catalog", help="write/query the JSONL catalog")
    p.add_argument("mode", choices=("write", "query"))
    p.add_argument("--path", required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--stratum", default=None)
    p.add_argument("--reduced", action="store_true")
    p.add_argument("--orbit-id", default=None)
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("strata-dim", help="dimension of a stratum from its cone orders")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--abelian", dest="orders_abelian", default=None, help="orders k1,k2,...")
    group.add_argument("--quadratic", dest="orders_quadratic", default=None, help="orders k1,k2,...")
    p.set_defaults(func=_cmd_strata_dim)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "strata-dim":
            args.kind = "abelian" if args.orders_abelian is not None else "quadratic"
            args.orders = args.orders_abelian if args.kind == "abelian" else args.orders_quadratic
        args.func(args)
    except SystemExit as exc:
        return exc.code or 0
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
