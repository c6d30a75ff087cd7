"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import formula
from .bijection import cyclic_shift_structure, verify_bijection
from .enumeration import (
    EnumerationTooLarge,
    default_cap,
    enumerate_paths,
    formula_flaw_table,
    is_member_S,
    oracle_flaw_table,
)
from .paths import BoundarySpec, count_flaws
from .report import CheckReport

SUITES = ("bijection", "recurrence", "identity", "oracle", "all")
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--a", type=_positive, required=True, help="horizontal slope parameter")
    common.add_argument("--b", type=_positive, required=True, help="vertical slope parameter")
    common.add_argument("--g", type=_positive, required=True, help="scaling factor")
    common.add_argument("--format", choices=("csv", "json", "md"), default="csv")
    common.add_argument("--oracle-cap", type=_positive, default=None,
                        help="maximum number of paths to enumerate (default: $LATTICEFLAW_CAP or 1e8)")
    common.add_argument("--jobs", type=_positive, default=1, help="worker processes for enumeration")

    parser = argparse.ArgumentParser(prog="latticeflaw", description="Count lattice paths by number of flaws.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="print |N_k(g)|")
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("table", parents=[common], help="emit the table k, |N_k(g)|, difference")
    p.add_argument("--oracle", action="store_true", help="count by brute force instead of the formula")

    p = sub.add_parser("enumerate", parents=[common], help="list every path with its flaw count")
    p.add_argument("--k", type=int, default=None, help="only paths with exactly k flaws")

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--trace", default=None, metavar="FILE",
                   help="write per-path bijection records (JSON lines) to FILE")
    return parser


def _spec(args, parser) -> BoundarySpec:
    if math.gcd(args.a, args.b) != 1:
        parser.error(
            f"--a {args.a} and --b {args.b} are not coprime; the flaw counts are only "
            "defined for a boundary with gcd(a, b) = 1"
        )
    return BoundarySpec(args.a, args.b, args.g)


def _check_k(k, spec: BoundarySpec, parser) -> None:
    if k is not None and not 0 <= k < spec.length:
        parser.error(f"--k must satisfy 0 <= k < g(a+b) = {spec.length}, got {k}")


def _emit_table(table, fmt: str, out) -> None:
    if fmt == "csv":
        out.write(table.to_csv())
    elif fmt == "json":
        out.write(table.to_json() + "\n")
    else:
        out.write(table.to_markdown())


def cmd_count(args, spec, out) -> int:
    value = formula.count_flawed(args.k, spec)
    if args.format == "json":
        out.write(json.dumps({"a": spec.a, "b": spec.b, "g": spec.g, "k": args.k, "count": value}) + "\n")
    else:
        out.write(f"{value}\n")
    return EXIT_OK


def cmd_table(args, spec, out) -> int:
    if args.oracle:
        table = oracle_flaw_table(spec, cap=args.oracle_cap, jobs=args.jobs)
    else:
        table = formula_flaw_table(spec)
    _emit_table(table, args.format, out)
    return EXIT_OK


def cmd_enumerate(args, spec, out) -> int:
    rows = []
    for p in enumerate_paths(spec, cap=args.oracle_cap):
        flaws = count_flaws(p, spec.a, spec.b)
        if args.k is None or flaws == args.k:
            in_s, _ = is_member_S(p, spec)
            rows.append((p.steps, flaws, in_s))
    if args.format == "json":
        out.write(json.dumps([{"steps": s, "flaws": f, "in_S": m} for s, f, m in rows]) + "\n")
    elif args.format == "md":
        out.write("| steps | flaws | in S |\n|---|---|---|\n")
        out.writelines(f"| {s} | {f} | {'yes' if m else 'no'} |\n" for s, f, m in rows)
    else:
        out.write("steps,flaws,in_S\n")
        out.writelines(f"{s},{f},{int(m)}\n" for s, f, m in rows)
    return EXIT_OK


def oracle_suite(spec: BoundarySpec, cap=None, jobs: int = 1) -> CheckReport:
    """Brute force versus closed form, plus the per-table invariants."""
    report = CheckReport("oracle", {"a": spec.a, "b": spec.b, "g": spec.g})
    oracle = oracle_flaw_table(spec, cap=cap, jobs=jobs)
    closed = formula_flaw_table(spec)
    for k, (x, y) in enumerate(zip(oracle.counts, closed.counts)):
        report.check(x == y, {"k": k, "oracle": x, "formula": y})
    report.check(sum(oracle.counts) == math.comb(spec.length, spec.g * spec.a), {"reason": "total"})
    s = spec.a + spec.b
    blocks = [oracle.counts[j * s:(j + 1) * s] for j in range(spec.g)]
    report.check(all(len(set(block)) == 1 for block in blocks), {"reason": "not constant on blocks"})
    report.check(all(x[0] > y[0] for x, y in zip(blocks, blocks[1:])), {"reason": "not strictly decreasing"})
    return report


def run_suites(spec: BoundarySpec, suite: str, cap=None, jobs: int = 1, trace=None) -> list[CheckReport]:
    reports = []
    wanted = SUITES[:-1] if suite == "all" else (suite,)
    if "bijection" in wanted:
        reports.append(verify_bijection(spec, cap=cap, trace=trace))
        if spec.g == 1:
            reports.append(cyclic_shift_structure(spec, cap=cap))
    if "recurrence" in wanted and spec.g >= 2:
        reports.append(formula.recurrence_check(spec.g, spec.a, spec.b))
    if "identity" in wanted:
        reports.append(formula.symfunc_identity_check(spec.g, spec.a, spec.b))
    if "oracle" in wanted:
        reports.append(oracle_suite(spec, cap=cap, jobs=jobs))
    return reports


def cmd_verify(args, spec, out) -> int:
    trace = open(args.trace, "w") if args.trace else None
    try:
        reports = run_suites(spec, args.suite, cap=args.oracle_cap, jobs=args.jobs, trace=trace)
    finally:
        if trace is not None:
            trace.close()
    if args.format == "json":
        out.write(json.dumps([r.as_dict() for r in reports], indent=2) + "\n")
    else:
        for r in reports:
            out.write(r.summary() + "\n")
            for failure in r.failures:
                out.write(f"  counterexample: {json.dumps(failure)}\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


COMMANDS = {"count": cmd_count, "table": cmd_table, "enumerate": cmd_enumerate, "verify": cmd_verify}


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        spec = _spec(args, parser)
        _check_k(getattr(args, "k", None), spec, parser)
    except SystemExit as exc:
        return int(exc.code)
    try:
        return COMMANDS[args.command](args, spec, out)
    except EnumerationTooLarge as exc:
        cap = args.oracle_cap or default_cap()
        print(f"latticeflaw: error: {exc} (raise --oracle-cap above {cap} to force it)", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
