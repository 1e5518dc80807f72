"""Command-line interface.

Exit codes: 0 success, 1 usage or syntax error, 2 domain error (the error
name goes to stderr).
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, TextIO

from .errors import ExpressionSyntaxError, GrossError
from .expvalue import ExpValue
from .integrals import GrossPolynomial, integrate
from .series import PatternSum, rearrangement_count, sum_arithmetic, sum_geometric, sum_pattern
from .sinpoly import coeff_mismatch, emit_curve, write_curve_csv
from .suite import run_suite
from .textio import format_value, parse_gross, parse_value
from .zetaeta import ZetaQuery, eta, euler_inequality_check, relation_sides, zeta

FORMATS = ("record", "json")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _fraction(text: str) -> Fraction:
    value = parse_gross(text)
    if not value.is_finite:
        raise UsageError(f"expected a finite rational, got {text!r}")
    return value.to_fraction()


def _list(text: str) -> List[str]:
    return [item.strip() for item in text.split(",") if item.strip()]


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="grosscalc", description="Exact arithmetic with grossone.")
    p.add_argument("--format", choices=FORMATS, default=None)
    p.add_argument("--seed", type=int, default=None)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("eval", help="evaluate an expression")
    e.add_argument("expr")
    sub.add_parser("repl", help="interactive session; 'let name = expr' binds")

    s = sub.add_parser("series", help="closed-form sums")
    ssub = s.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    a = ssub.add_parser("arith")
    a.add_argument("--a1", required=True)
    a.add_argument("--d", required=True)
    a.add_argument("-n", required=True)
    g = ssub.add_parser("geom")
    g.add_argument("-x", required=True)
    g.add_argument("-n", required=True)
    g.add_argument("--from", dest="start", type=int, choices=(0, 1), default=0)
    pt = ssub.add_parser("pattern")
    pt.add_argument("--pattern", required=True, help="comma separated items, e.g. 1,1,-1")
    pt.add_argument("-n", required=True)
    pt.add_argument("--counts", action="store_true", help="print positive and negative item counts")

    for name in ("zeta", "eta"):
        z = sub.add_parser(name)
        z.add_argument("-s", type=int, required=True)
        z.add_argument("-n", required=True)

    i = sub.add_parser("integrate", help="integrate a polynomial c0 + c1 x + ...")
    i.add_argument("-p", required=True, help="comma separated coefficients c0,c1,...")
    i.add_argument("-a", required=True)
    i.add_argument("-b", required=True)

    sp = sub.add_parser("sinpoly")
    spsub = sp.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    mm = spsub.add_parser("mismatch")
    mm.add_argument("-k", type=int, required=True)
    cv = spsub.add_parser("curve")
    cv.add_argument("-k", type=int, required=True)
    cv.add_argument("--x-min", type=float, default=-10.0)
    cv.add_argument("--x-max", type=float, default=10.0)
    cv.add_argument("--steps", type=int, default=201)

    c = sub.add_parser("check")
    csub = c.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    r = csub.add_parser("relation")
    r.add_argument("-s", type=int, required=True)
    r.add_argument("-n", required=True)
    eu = csub.add_parser("euler")
    eu.add_argument("-s", type=int, required=True)
    eu.add_argument("-n", type=int, required=True)
    eu.add_argument("--depths", required=True, help="comma separated depths, one per prime")
    su = csub.add_parser("suite")
    su.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    return p


class Session:
    """Named bindings of one REPL session."""

    def __init__(self):
        self.env: Dict[str, ExpValue] = {}

    def execute(self, line: str) -> Optional[ExpValue]:
        line = line.strip()
        if not line:
            return None
        if line.startswith("let ") and "=" in line:
            name, expr = line[4:].split("=", 1)
            name = name.strip()
            if not name.isidentifier() or name == "G":
                raise ExpressionSyntaxError(f"bad binding name {name!r}", 4)
            value = parse_value(expr, self.env)
            self.env[name] = value
            return value
        return parse_value(line, self.env)


def _repl(stdin: TextIO, out: TextIO, err: TextIO, fmt: str) -> int:
    session = Session()
    for line in stdin:
        if line.strip() in ("quit", "exit"):
            break
        try:
            value = session.execute(line)
        except GrossError as exc:
            print(f"{exc.code}: {exc}", file=err)
            continue
        if value is not None:
            print(format_value(value, fmt), file=out)
    return 0


def _run(args, stdin: TextIO, out: TextIO, err: TextIO) -> int:
    fmt = args.format
    emit = lambda v: print(format_value(v, fmt), file=out)  # noqa: E731

    if args.command == "eval":
        emit(parse_value(args.expr))
    elif args.command == "repl":
        return _repl(stdin, out, err, fmt)
    elif args.command == "series":
        if args.kind == "arith":
            emit(sum_arithmetic(parse_gross(args.a1), parse_gross(args.d), parse_gross(args.n)))
        elif args.kind == "geom":
            emit(sum_geometric(_fraction(args.x), parse_gross(args.n), start=args.start))
        else:
            ps = PatternSum([_fraction(x) for x in _list(args.pattern)], parse_gross(args.n))
            if args.counts:
                for v in rearrangement_count(ps):
                    emit(v)
            else:
                emit(sum_pattern(ps))
    elif args.command in ("zeta", "eta"):
        q = ZetaQuery(args.s, parse_gross(args.n))
        emit(zeta(q) if args.command == "zeta" else eta(q))
    elif args.command == "integrate":
        poly = GrossPolynomial([parse_gross(c) for c in _list(args.p)])
        emit(integrate(poly, parse_gross(args.a), parse_gross(args.b)))
    elif args.command == "sinpoly":
        if args.kind == "mismatch":
            report = coeff_mismatch(args.k)
            for entry in report.entries:
                product = f"{entry.product.rational}*pi^({entry.product.pi_power})"
                gap = "" if entry.numeric_gap is None else f"  gap={float(entry.numeric_gap):.17g}"
                print(f"x^{entry.degree}: {entry.taylor} vs {product}{gap}", file=out)
        else:
            write_curve_csv(emit_curve(args.k, args.x_min, args.x_max, args.steps), out)
    elif args.command == "check":
        if args.kind == "relation":
            lhs, rhs = relation_sides(args.s, parse_gross(args.n))
            print(f"eta = {format_value(lhs, fmt)}", file=out)
            print(f"rhs = {format_value(rhs, fmt)}", file=out)
            print("equal" if lhs == rhs else "NOT EQUAL", file=out)
            return 0 if lhs == rhs else 2
        if args.kind == "euler":
            depths = [int(d) for d in _list(args.depths)]
            unequal = euler_inequality_check(args.s, args.n, depths)
            print("unequal" if unequal else "equal", file=out)
        else:
            results = run_suite(args.seed)
            for res in results:
                print(f"{'PASS' if res.passed else 'FAIL'}  {res.name}  {res.detail}".rstrip(), file=out)
            failed = sum(not r.passed for r in results)
            print(f"{len(results) - failed}/{len(results)} passed", file=out)
            return 0 if not failed else 2
    return 0


def main(argv: Optional[Sequence[str]] = None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.format is None:
            args.format = os.environ.get("GROSSCALC_FORMAT", "record")
            if args.format not in FORMATS:
                raise UsageError(f"GROSSCALC_FORMAT must be one of {', '.join(FORMATS)}")
        return _run(args, stdin, out, err)
    except UsageError as exc:
        print(str(exc), file=err)
        return 1
    except ExpressionSyntaxError as exc:
        print(f"{exc.code}: {exc}", file=err)
        return 1
    except GrossError as exc:
        print(f"{exc.code}: {exc}", file=err)
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=err)
        return 2


if __name__ == "__main__":
    sys.exit(main())
