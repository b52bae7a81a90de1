"""Command-line entry point.

Exit codes: 0 success, 1 suite failure, 2 usage or parse error,
3 construction verification failure, 4 enumeration guard tripped.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .code import DEFAULT_GUARD, analyze, from_generator
from .constructions import (
    MultiplierSet,
    build_self_complementary_minus,
    build_self_complementary_plus,
    build_two_weight,
    default_multipliers,
)
from .errors import ConstructionError, EnumerationGuardError
from .field import GF
from .matrix import Matrix
from .poly import Polynomial, find_simplex_generators, simplex_length
from .suites import run_suite

EXIT_OK, EXIT_SUITE, EXIT_USAGE, EXIT_BUILD, EXIT_GUARD = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _read_source(value: str) -> str:
    if value == "-":
        return sys.stdin.read()
    path = Path(value)
    if path.is_file():
        return path.read_text()
    raise UsageError(f"no such file: {value}")


def _read_g1(value: str, field: GF) -> Polynomial:
    path = Path(value)
    text = path.read_text() if path.is_file() else value
    try:
        return Polynomial.from_text(field, text)
    except ValueError as exc:
        raise UsageError(f"bad --g1: {exc}") from None


def cmd_simplex(args) -> int:
    try:
        gens = find_simplex_generators(GF(args.q), args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    for g in gens:
        print(g.to_text())
    return EXIT_OK


def cmd_construct(args) -> int:
    try:
        field = GF(args.q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    t = args.k
    if args.kind != "su2" and args.q != 2:
        raise UsageError(f"{args.kind} constructions are binary; got --q {args.q}")
    try:
        g1 = _read_g1(args.g1, field) if args.g1 else find_simplex_generators(field, t)[0]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        if args.kind == "su2":
            m = simplex_length(args.q, t)
            if args.multipliers:
                mult = MultiplierSet.from_text(field, m, args.multipliers)
            elif args.p is None:
                raise UsageError("su2 needs --p or --multipliers")
            else:
                mult = default_multipliers(field, t, args.p)
            if args.p is not None and mult.p != args.p:
                raise UsageError(f"--multipliers describe {mult.p} blocks but --p is {args.p}")
            code = build_two_weight(g1, t, mult)
        elif args.kind == "gr-minus":
            code = build_self_complementary_minus(g1, t)
        else:
            code = build_self_complementary_plus(g1, t)
    except ConstructionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUILD
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    sys.stdout.write(code.raw_generator.to_text())
    return EXIT_OK


def _parse_matrix(source: str) -> Matrix:
    try:
        return Matrix.from_text(_read_source(source))
    except ValueError as exc:
        raise UsageError(f"cannot parse matrix: {exc}") from None


def cmd_analyze(args) -> int:
    mat = _parse_matrix(args.input)
    try:
        code = from_generator(mat)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        report = analyze(code, args.m, guard=args.guard)
    except EnumerationGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    if args.format == "human":
        print(report.render())
    print(report.summary())
    return EXIT_OK


def cmd_export(args) -> int:
    sys.stdout.write(_parse_matrix(args.input).to_text())
    return EXIT_OK


def cmd_reproduce(args) -> int:
    results = run_suite(args.suite)
    print("\n\n".join(r.render() for r in results))
    return EXIT_OK if all(r.passed for r in results) else EXIT_SUITE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qctw", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simplex", help="list cyclic simplex generator polynomials")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_simplex)

    p = sub.add_parser("construct", help="print a generator matrix")
    p.add_argument("kind", choices=["su2", "gr-minus", "gr-plus"])
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--k", type=int, required=True, help="simplex dimension t")
    p.add_argument("--p", type=int, help="number of circulant blocks (su2)")
    p.add_argument("--g1", help="generator polynomial: file path or inline coefficients")
    p.add_argument("--multipliers", help="e.g. '0;1,0;2,0' (zero block, then a,e pairs)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("analyze", help="report the parameters of a matrix file")
    p.add_argument("input", nargs="?", default="-", help="matrix file, or - for stdin")
    p.add_argument("--m", type=int, help="circulant order for the quasi-cyclic check")
    p.add_argument("--guard", type=int, default=DEFAULT_GUARD)
    p.add_argument("--format", choices=["human", "machine"], default="human")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("export", help="re-emit a matrix file canonically")
    p.add_argument("input", nargs="?", default="-")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("reproduce", help="rebuild the published codes and compare")
    p.add_argument("suite", choices=["table1", "example1", "example2", "grey-rankin", "all"])
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
