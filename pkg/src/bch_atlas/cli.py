"""``atlas`` command line.

Exit codes: 0 success / verification pass, 1 verification mismatch,
2 usage or domain error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import tables
from .errors import DomainError
from .verify import CHECKS, UsageError, verify

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None, help="output path (default: standard output)")
    p.add_argument("--workers", type=int, default=None,
                   help="worker threads (default: $ATLAS_WORKERS or 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="atlas", description="Binary BCH codes of length 2^m + 1.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("leaders", help="coset leaders in a range")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--lo", type=int)
    p.add_argument("--hi", type=int)
    _common(p)

    p = sub.add_parser("deltas", help="the five largest coset leaders")
    p.add_argument("--m", type=int, required=True)
    _common(p)

    p = sub.add_parser("dims", help="dimension and Bose distance of one code")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--b", type=int, choices=(0, 1), required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--closed", dest="mode", action="store_const", const="closed")
    mode.add_argument("--brute", dest="mode", action="store_const", const="brute")
    mode.add_argument("--both", dest="mode", action="store_const", const="both")
    p.set_defaults(mode="both")
    _common(p)

    p = sub.add_parser("partition", help="interval partition IA1 / IA2")
    p.add_argument("--scheme", choices=("ia1", "ia2"), required=True)
    p.add_argument("--t", type=int, required=True)
    _common(p)

    p = sub.add_parser("genpoly", help="generator polynomial of one code")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--b", type=int, choices=(0, 1), required=True)
    _common(p)

    p = sub.add_parser("verify", help="closed form vs. brute force")
    p.add_argument("--theorem", required=True, choices=sorted(CHECKS))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--sample", type=int, default=None)
    _common(p)
    return parser


def _table_params(args) -> dict:
    keys = {
        "leaders": ("m", "lo", "hi"),
        "deltas": ("m",),
        "dims": ("m", "delta", "b", "mode"),
        "partition": ("scheme", "t"),
        "genpoly": ("m", "delta", "b"),
    }[args.command]
    params = {k: getattr(args, k) for k in keys}
    params["workers"] = args.workers
    return params


def _render_report(report, fmt: str) -> str:
    data = report.as_dict()
    if fmt == "json":
        return json.dumps(data, sort_keys=True, indent=2) + "\n"
    buf = io.StringIO()
    cols = ["theorem_id", "m", "status", "cases_checked", "mismatch_count", "sampled", "seed", "elapsed_ms"]
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(cols)
    data["mismatch_count"] = len(report.mismatches)
    writer.writerow([str(data[c]).lower() if isinstance(data[c], bool) else data[c] for c in cols])
    if report.mismatches:
        writer.writerow(["input", "closed", "oracle"])
        for row in report.mismatches:
            writer.writerow(row)
    return buf.getvalue()


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.workers is not None and args.workers < 1:
        print("atlas: --workers must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.command == "verify":
            report = verify(args.theorem, args.m, sample=args.sample, workers=args.workers)
            tables.write(_render_report(report, args.format), args.out)
            return EXIT_OK if report.status == "PASS" else EXIT_MISMATCH
        params = _table_params(args)
        rows = tables.build_rows(args.command, params)
        tables.write(tables.render(args.command, params, rows, args.format), args.out)
    except (UsageError, DomainError) as exc:
        print(f"atlas: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"atlas: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
