"""Command-line surface.

Subcommands::

    check  --calculus REF [--suite NAME]... [--max-degree N] [--report PATH]
    eval   --calculus REF --expr TEXT [--max-degree N]
    tables --calculus REF [--max-degree N]
    dims   --calculus REF --max-degree N

``REF`` is a spec file path or ``builtin:z2`` / ``builtin:z3`` /
``builtin:s3``.  Exit codes: 0 all requested suites pass, 1 a suite failed,
2 usage, parse, or spec errors.  Diagnostics go to stderr, results to
stdout; ``check`` output ends with a single ``SUITES m/n PASS`` line.
"""

from __future__ import annotations

import argparse
import sys

from . import dsl, verify
from .crossprod import CrossAlgebra
from .hopf import HopfCalcError
from .wedge import WedgeAlgebra


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hopfcalc",
        description="Exact bicovariant differential calculus engine",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--calculus", required=True, metavar="REF",
                       help="spec file path or builtin:{z2,z3,s3}")
        p.add_argument("--max-degree", type=int, default=None,
                       help="override the spec's max_degree")

    p_check = sub.add_parser("check", help="run verification suites")
    add_common(p_check)
    p_check.add_argument("--suite", action="append", default=None,
                         choices=list(verify.SUITE_NAMES),
                         help="run only the named suite (repeatable)")
    p_check.add_argument("--report", default=None, metavar="PATH",
                         help="write per-case report lines to PATH")

    p_eval = sub.add_parser("eval", help="evaluate an expression to normal form")
    add_common(p_eval)
    p_eval.add_argument("--expr", required=True, help="expression text")

    p_tables = sub.add_parser("tables", help="print the calculus tables")
    add_common(p_tables)

    p_dims = sub.add_parser("dims", help="print exterior power dimensions")
    add_common(p_dims)
    return parser


def _load(args):
    spec = dsl.load_spec(args.calculus)
    maxdeg = args.max_degree if args.max_degree is not None else spec.max_degree
    if maxdeg < 1:
        raise dsl.SpecError("max_degree must be at least 1")
    return spec, spec.build(), maxdeg


def _cmd_check(args) -> int:
    spec, fodc, maxdeg = _load(args)
    reports = verify.run_suites(fodc, maxdeg, args.suite)
    if args.report:
        with open(args.report, "w", encoding="utf-8", newline="\n") as fh:
            for rep in reports:
                for line in rep.to_lines():
                    fh.write(line + "\n")
    for rep in reports:
        print(rep.summary())
        for case in rep.failures():
            print(f"  FAIL {case.name}: {case.lhs} != {case.rhs}")
    n_pass = sum(1 for rep in reports if rep.passed)
    print(f"SUITES {n_pass}/{len(reports)} PASS")
    return 0 if n_pass == len(reports) else 1


def _cmd_eval(args) -> int:
    spec, fodc, maxdeg = _load(args)
    value = dsl.evaluate(dsl.parse(args.expr), fodc, maxdeg=maxdeg)
    print(dsl.print_normal(value))
    return 0


def _cmd_tables(args) -> int:
    spec, fodc, maxdeg = _load(args)
    names = spec.names
    n = fodc.n
    print(f"calculus {spec.label or args.calculus}: n={n}, max_degree={maxdeg}")
    print(f"form index map: " + ", ".join(
        f"w[{i + 1}] ~ {names[fodc.subset[i]]}" for i in range(n)))
    print("r table (r[i][j] in A):")
    for i in range(n):
        for j in range(n):
            print(f"  r[{i + 1}][{j + 1}] = {fodc.r[i][j]}")
    print("f table (f[i][j] in A*):")
    for i in range(n):
        for j in range(n):
            if not fodc.f[i][j].is_zero:
                print(f"  f[{i + 1}][{j + 1}] = {fodc.f[i][j]}")
    print("chi (in A*):")
    for i in range(n):
        print(f"  chi[{i + 1}] = {fodc.chi[i]}")
    ctx = WedgeAlgebra.for_calculus(fodc, maxdeg)
    print("braiding sigma (rows (m,n), cols (i,j)):")
    sig = ctx.braiding.sigma
    for row in range(sig.rows):
        print("  " + " ".join(str(sig.at(row, col)) for col in range(sig.cols)))
    print("exterior power dimensions:")
    for deg, dim in enumerate(ctx.basis.dims):
        print(f"  degree {deg}: {dim}")
    return 0


def _cmd_dims(args) -> int:
    spec, fodc, maxdeg = _load(args)
    ctx = WedgeAlgebra.for_calculus(fodc, maxdeg)
    for deg, dim in enumerate(ctx.basis.dims):
        print(f"degree {deg}: {dim}")
    return 0


_COMMANDS = {
    "check": _cmd_check,
    "eval": _cmd_eval,
    "tables": _cmd_tables,
    "dims": _cmd_dims,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return _COMMANDS[args.command](args)
    except (HopfCalcError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
