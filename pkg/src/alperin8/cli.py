"""Command-line front end: ``alperin8 <suite> [options]``.

Exit status is 0 when every check passes, 2 when a check fails and 1 on a
usage error.
"""

from __future__ import annotations

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from . import suites
from .liedata import load_catalog
from .report import Check, Report

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _qlist(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a list of integers: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--data", help="JSON-lines file extending the unipotent degree catalog")
    common.add_argument("--report-dir", help="write <suite>.json, <suite>.header.json and <suite>.txt here")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for independent checks")
    common.add_argument("--json", action="store_true", help="print the structured report instead of text")

    p = _Parser(prog="alperin8", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, help_: str):
        return sub.add_parser(name, help=help_, parents=[common])

    add("local-groups", "character tables, L0 lattices and basis shapes of (C2)^3 x| E")
    add("landrock", "(k, l) table and its inverse")
    add("norm8", "norm-8 support shapes by brute force")
    sp = add("classical-defects", "unipotent 2-defect bounds for classical groups")
    sp.add_argument("--lmax", type=int, default=8)
    sp.add_argument("--qset", type=_qlist, default=list(suites.DEFAULT_QS) + [17])
    sp = add("symbol-identity", "exhaustive c + h+ + h- - 2 rank identity")
    sp.add_argument("--rankmax", type=int, default=8)
    sp = add("exceptional", "2-defects of named exceptional unipotent characters")
    sp.add_argument("--q", type=_qlist, default=[3, 5, 7, 9])
    sp = add("tables-e6", "E6 and 2E6 small-defect tables")
    sp.add_argument("--q", type=_qlist, default=list(suites.DEFAULT_QS))
    sp = add("f4", "F4 isolated-centralizer defects")
    sp.add_argument("--q", type=_qlist, default=[3, 5, 7])
    sp = add("e8", "E8 degree arithmetic and Zsigmondy nonvanishing")
    sp.add_argument("--q", type=_qlist, default=[3, 5])
    sp = add("zsigmondy", "primitive prime divisors")
    sp.add_argument("--q", type=_qlist, default=[3, 5, 7, 9])
    sp.add_argument("--nmax", type=int, default=20)
    sp = add("sylow", "Sylow 2-subgroups of SL2, PGL2, PSL2")
    sp.add_argument("--q", type=_qlist, default=list(suites.DEFAULT_QS))
    sp = add("isometry", "perfect isometry extension for one inertial quotient")
    sp.add_argument("--case", type=int, choices=(3, 7, 21), required=True)
    sp = add("all", "every suite")
    sp.add_argument("--quick", action="store_true", help="smaller ranks and q-sets")
    return p


def plan(args: argparse.Namespace) -> list[tuple[str, dict]]:
    """(suite name, keyword arguments) pairs to run."""
    data = {"data": args.data} if args.data else {}
    cmd = args.command
    if cmd == "all":
        quick = args.quick
        return [
            ("local-groups", {}),
            ("landrock", {}),
            ("norm8", {}),
            ("symbol-identity", {"rankmax": 6 if quick else 8}),
            ("classical-defects", {"lmax": 5 if quick else 8,
                                   "qset": [3, 5, 7, 9] if quick else list(suites.DEFAULT_QS) + [17]}),
            ("exceptional", dict(data)),
            ("tables-e6", dict(data)),
            ("f4", dict(data)),
            ("e8", dict(data)),
            ("zsigmondy", {"nmax": 12 if quick else 20}),
            ("sylow", {"qs": [3, 5, 7] if quick else list(suites.DEFAULT_QS)}),
        ] + [("isometry", {"case": c}) for c in (3, 7, 21)]
    kwargs: dict = {}
    if cmd == "classical-defects":
        kwargs = {"lmax": args.lmax, "qset": args.qset}
    elif cmd == "symbol-identity":
        kwargs = {"rankmax": args.rankmax}
    elif cmd in ("exceptional", "tables-e6", "f4", "e8"):
        kwargs = {"qs": args.q, **data}
    elif cmd == "zsigmondy":
        kwargs = {"qs": args.q, "nmax": args.nmax}
    elif cmd == "sylow":
        kwargs = {"qs": args.q}
    elif cmd == "isometry":
        kwargs = {"case": args.case}
    return [(cmd, kwargs)]


def execute(steps: Sequence[tuple[str, dict]], jobs: int = 1) -> list[Check]:
    if jobs <= 1 or len(steps) == 1:
        results = [suites.run_suite(name, kw) for name, kw in steps]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(suites.run_suite, *zip(*steps)))
    return [c for checks in results for c in checks]


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1:
        parser.error("--jobs must be positive")
    start = time.perf_counter()
    try:
        if args.data:
            load_catalog(args.data)
    except (OSError, ValueError, KeyError) as exc:
        print(f"alperin8: error: cannot load {args.data}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        checks = execute(plan(args), args.jobs)
    except suites.UsageError as exc:
        print(f"alperin8: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rep = Report(args.command, checks, time.perf_counter() - start)
    sys.stdout.write(rep.to_json() if args.json else rep.to_text())
    if args.report_dir:
        rep.write(args.report_dir)
    return EXIT_OK if rep.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
