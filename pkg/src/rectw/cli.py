"""Command line: ``rectw gen`` writes a W cache, ``rectw check`` runs suites.

Exit codes: 0 all checks pass, 1 some check failed, 2 configuration error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import List, Optional

from .checks import MUTATIONS
from .reports import SUITES, ConfigError, SuiteConfig, cache_w, run_suite
from .wconstruct import WAlgebra

EXIT_PASS, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


def _instance_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, default=2)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rectw", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="build W^(r)_{i,j} from the column determinant and write them as JSON")
    _instance_args(g)
    g.add_argument("--out", required=True, help="cache file to write")

    c = sub.add_parser("check", help="run a verification suite")
    c.add_argument("--suite", required=True, choices=SUITES + ("all",))
    _instance_args(c)
    c.add_argument("--cutoff", type=int, default=1, help="weight cutoff D for phi / ev")
    c.add_argument("--c-zero", action="store_true", help="specialize c = 0 (phi always does)")
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--mutate", choices=sorted(MUTATIONS), help="inject a named coefficient perturbation")
    c.add_argument("--report", help="write the JSON report here")
    c.add_argument("--w-cache", help="W cache file: loaded when valid, (re)written otherwise")
    c.add_argument("--readings", action="store_true",
                   help="phi/ev: also rerun the verbatim and alternative readings and list their failures")
    c.add_argument("--quiet", action="store_true", help="only print the summary line")
    return ap


def cmd_gen(args) -> int:
    try:
        cfg = SuiteConfig("gen", args.m, args.n, args.l)
        wa = WAlgebra(cfg.instance())
    except (ConfigError, ValueError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    doc = cache_w(wa, args.out)
    print(f"wrote {len(doc['W'])} generators for {wa.inst} to {args.out}")
    return EXIT_PASS


def cmd_check(args) -> int:
    cfg = SuiteConfig(args.suite, args.m, args.n, args.l, cutoff=args.cutoff, c_zero=args.c_zero,
                      jobs=args.jobs, out=args.report, mutate=args.mutate, w_cache=args.w_cache,
                      readings=args.readings)
    try:
        report = run_suite(cfg)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        if args.report:
            with open(args.report, "w") as fh:
                json.dump({"config": cfg.echo(), "error": str(exc)}, fh, indent=1, sort_keys=True)
        return EXIT_CONFIG
    if args.report:
        report.dump(args.report)
    if not args.quiet:
        for c in report.checks:
            if not c.passed:
                print(f"FAIL {c.id}  ({c.paper_ref}) {c.detail}")
        for note in report.notes:
            print(f"note: {note}")
        for row in report.readings:
            print(f"reading {row['label']} {row['readings']}: {row['failed']}/{row['checks']} fail")
    s = report.summary()
    print(f"{cfg.suite} ({cfg.m},{cfg.n},{cfg.l}): {s['passed']}/{s['total']} pass, "
          f"{s['failed']} fail [{s['status']}] {s['wall_seconds']:.1f}s")
    return EXIT_PASS if report.passed else EXIT_FAIL


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.command == "gen":
        return cmd_gen(args)
    return cmd_check(args)


if __name__ == "__main__":
    sys.exit(main())
