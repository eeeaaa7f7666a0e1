"""Command-line front end.

Exit codes: 0 success, 1 an asserted identity failed, 2 usage or parse
error, 3 domain or parameter mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import harness
from .algebra import (
    AlgebraError,
    OCT_CELLS,
    QUAT_CELLS,
    coct_mul_central,
    coct_mul_paper,
    structure_constants,
)
from .literals import ParseError, format_element, parse_element, parse_params, to_json
from .recurrence import RecurrenceSpec, find_invertible_threshold
from .reps import REP_MAPS, const_matrix
from .scalars import format_scalar, jsonable_scalar
from .zorn import zorn_mul

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3

REP_DOMAIN = {
    "lambda": "quat", "rho": "quat",
    "Lambda": "oct", "Delta": "oct",
    "Gamma": "cquat", "Theta": "cquat",
    "Phi": "coct", "Psi": "coct",
}


class UsageError(Exception):
    pass


def _int_list(text: str, n: int, flag: str) -> list[int]:
    try:
        values = [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"{flag} expects {n} comma-separated integers, got {text!r}") from None
    if len(values) != n:
        raise UsageError(f"{flag} expects {n} comma-separated integers, got {text!r}")
    return values


def _emit(obj, out):
    out.write(json.dumps(obj) + "\n")


def cmd_mul(args, out):
    algebra = args.algebra
    params = parse_params(args.params, algebra) if algebra in ("quat", "oct") else None
    lhs = parse_element(args.lhs, algebra, params)
    rhs = parse_element(args.rhs, algebra, params)
    if algebra == "coct":
        product = (coct_mul_paper if args.kind == "paper" else coct_mul_central)(lhs, rhs)
    elif algebra == "zorn":
        product = zorn_mul(lhs, rhs)
    else:
        product = lhs * rhs
    if args.pretty:
        out.write(format_element(product) + "\n")
    else:
        _emit(to_json(product), out)
    return EXIT_OK


def _matrix_csv(m) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in m.rows:
        writer.writerow(format_scalar(x) for x in row)
    return buf.getvalue()


def cmd_rep(args, out):
    if args.map == "const":
        try:
            m = const_matrix(args.element)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
    else:
        domain = REP_DOMAIN[args.map]
        params = parse_params(args.params, domain) if domain in ("quat", "oct") else None
        if args.params is not None and params is None:
            raise UsageError(f"{args.map} takes no --params")
        m = REP_MAPS[args.map](parse_element(args.element, domain, params))
    if args.format == "json":
        _emit([[jsonable_scalar(x) for x in row] for row in m.rows], out)
    else:
        out.write(_matrix_csv(m))
    return EXIT_OK


def cmd_verify(args, out):
    ids = harness.ids() if args.id == "all" else [args.id]
    for pid in ids:
        if pid not in harness.CATALOG:
            raise UsageError(f"unknown proposition {pid!r}; known: {', '.join(harness.ids())}")
    mode = "random" if args.random is not None else "exhaustive"
    status = EXIT_OK
    for pid in ids:
        report = harness.verify_proposition(
            pid, mode, count=args.random or 0, seed=args.seed,
            max_counterexamples=args.max_counterexamples,
        )
        _emit(report.to_json(), out)
        if not report.ok:
            status = EXIT_FAILED
    return status


def cmd_invertibles(args, out):
    a, b, c = _int_list(args.rec, 3, "--rec")
    x0, x1, x2 = _int_list(args.seed, 3, "--seed")
    if args.bound < 0:
        raise UsageError("--bound must be non-negative")
    spec = RecurrenceSpec(a, b, c, x0, x1, x2)
    params = parse_params(args.params, args.algebra)
    if any(not isinstance(v, int) for v in params.values()):
        raise UsageError("--params must be integers for exact certification")
    report = find_invertible_threshold(spec, params, args.bound)
    if args.out == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["n", "norm", "nonzero"])
        for n, v in enumerate(report.norms):
            writer.writerow([n, v, int(v != 0)])
    else:
        _emit(report.to_json(), out)
    return EXIT_OK


def _cell_text(coef, k, units) -> str:
    if coef == 0:
        return "0"
    mag = format_scalar(abs(coef))
    unit = units[k]
    if not unit:
        body = mag
    elif mag == "1":
        body = unit
    else:
        body = f"{mag}{unit}" if "/" not in mag and "." not in mag else f"{mag}*{unit}"
    return ("-" if coef < 0 else "") + body


def cmd_tables(args, out):
    params = parse_params(args.params, args.algebra)
    dim = len(QUAT_CELLS) if args.algebra == "quat" else len(OCT_CELLS)
    units = ["1"] + [f"e{k}" for k in range(1, dim)]
    names = [""] + units[1:]
    table = structure_constants(params)
    grid = [[_cell_text(c, k, names) for c, k in row] for row in table]
    if args.pretty:
        width = max(len(cell) for row in grid for cell in row + units) + 2
        out.write(" " * 4 + "".join(u.rjust(width) for u in units) + "\n")
        for u, row in zip(units, grid):
            out.write(u.ljust(4) + "".join(cell.rjust(width) for cell in row) + "\n")
    else:
        _emit({
            "algebra": args.algebra,
            "params": {k: jsonable_scalar(v) for k, v in params.as_dict().items()},
            "basis": units,
            "table": grid,
        }, out)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="octalg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("mul", help="multiply two elements")
    p.add_argument("--algebra", choices=["quat", "oct", "coct", "zorn"], required=True)
    p.add_argument("--params", help="b1,b2 or a,b,g (or a JSON object)")
    p.add_argument("--kind", choices=["paper", "central"], default="paper",
                   help="complex octonion product convention")
    p.add_argument("--pretty", action="store_true")
    p.add_argument("lhs")
    p.add_argument("rhs")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("rep", help="dump a representation matrix")
    p.add_argument("map", choices=list(REP_MAPS) + ["const"])
    p.add_argument("element", help="element literal, or constant name for 'const'")
    p.add_argument("--params")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_rep)

    p = sub.add_parser("verify", help="check an identity exactly")
    p.add_argument("id", help="proposition id or 'all'")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true", help="all basis tuples (default)")
    mode.add_argument("--random", type=int, metavar="N", help="N seeded random samples")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-counterexamples", type=int, default=harness.MAX_COUNTEREXAMPLES)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("invertibles", help="scan norms of W_n / Z_n")
    p.add_argument("--rec", required=True, metavar="A,B,C")
    p.add_argument("--seed", required=True, metavar="X0,X1,X2")
    p.add_argument("--algebra", choices=["quat", "oct"], required=True)
    p.add_argument("--params")
    p.add_argument("--bound", type=int, default=100)
    p.add_argument("--out", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_invertibles)

    p = sub.add_parser("tables", help="dump structure constants")
    p.add_argument("--algebra", choices=["quat", "oct"], required=True)
    p.add_argument("--params")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_tables)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except (UsageError, ParseError) as exc:
        print(f"octalg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AlgebraError as exc:
        print(f"octalg: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
