"""Command-line front end.

Exit codes: 0 ok, 1 table rows disagree with the fixtures, 2 usage,
3 invalid bundle data, 4 no stabilization, 5 oracle mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional

from .bundle import BundleError, make_spec
from .cech import NoStabilization
from .endo import h0_end
from .poly import PolySyntaxError, format_laurent
from .report import OracleMismatch, compute, fixture_rows, fixture_spec

EXIT_OK, EXIT_TABLE_MISMATCH, EXIT_USAGE, EXIT_ILL_POSED, EXIT_NO_STABILIZATION, EXIT_ORACLE = 0, 1, 2, 3, 4, 5

CSV_FIELDS = ["k", "j", "p", "width", "height", "chi_loc", "h1_end", "delta", "h1_minus_delta"]

SINGLE = {
    "width": ("width",),
    "height": ("height",),
    "chiloc": ("width", "height"),
    "h1end": ("h1_end",),
    "delta": ("delta",),
    "report": ("width", "height", "h1_end", "delta"),
}
SINGLE_FIELD = {"width": "width", "height": "height", "chiloc": "chi_loc", "h1end": "h1_end", "delta": "delta"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zkinv", description="Local invariants of rank-2 bundles on Z_k.")
    sub = parser.add_subparsers(dest="command", required=True)

    def bundle_args(sp):
        sp.add_argument("-k", type=int, required=True, help="self-intersection -k of the zero section")
        sp.add_argument("-j", type=int, required=True, help="splitting type")
        sp.add_argument("-p", default="0", help="extension polynomial, e.g. 'z^-1*u + z*u^2'")
        sp.add_argument("--format", choices=("text", "json", "csv"), default="text")
        sp.add_argument("--oracle", action="store_true", help="cross-check with the truncated Čech complex")

    for name in ("width", "height", "chiloc", "h1end", "delta", "report"):
        bundle_args(sub.add_parser(name))
    h0 = sub.add_parser("h0end")
    bundle_args(h0)
    h0.add_argument("--n", type=int, required=True, help="order of the neighbourhood of the zero section")

    table = sub.add_parser("table")
    table.add_argument("--suite", choices=("instanton", "noninstanton", "all"), default="all")
    table.add_argument("--format", choices=("text", "json", "csv"), default="text")
    table.add_argument("--oracle", action="store_true")
    table.add_argument("--timings", action="store_true", help="include per-invariant milliseconds in JSON")
    return parser


def _csv(records: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    for rec in records:
        writer.writerow({key: "" if rec.get(key) is None else rec[key] for key in CSV_FIELDS})
    return buf.getvalue()


def _fmt(value) -> str:
    return "-" if value is None else str(value)


def _text_record(d: dict) -> str:
    lines = [f"k={d['k']} j={d['j']} p={d['p']} (normalized: {d['p_normalized']})"]
    for key in ("width", "height", "chi_loc", "h1_end", "delta", "h1_minus_delta"):
        if d.get(key) is not None:
            lines.append(f"  {key:15s}{d[key]}")
    return "\n".join(lines)


def _cmd_single(args) -> int:
    spec = make_spec(args.k, args.j, args.p)
    rec = compute(spec, SINGLE[args.command], oracle=args.oracle)
    d = rec.as_dict()
    if args.format == "json":
        print(json.dumps(d, sort_keys=False))
    elif args.format == "csv":
        sys.stdout.write(_csv([d]))
    elif args.command == "report":
        print(_text_record(d))
    else:
        print(d[SINGLE_FIELD[args.command]])
    return EXIT_OK


def _cmd_h0end(args) -> int:
    if args.n < 0:
        raise _Usage("--n must be non-negative")
    spec = make_spec(args.k, args.j, args.p)
    value = h0_end(spec, args.n)
    d = {"k": spec.k, "j": spec.j, "p": args.p, "p_normalized": format_laurent(spec.p), "n": args.n, "h0_end": value}
    if args.format == "json":
        print(json.dumps(d))
    elif args.format == "csv":
        print("k,j,p,n,h0_end")
        print(f"{spec.k},{spec.j},{args.p},{args.n},{value}")
    else:
        print(value)
    return EXIT_OK


def _row_status(row: dict, d: dict) -> str:
    expected = row.get("expected") or {}
    asserted = {key: v for key, v in expected.items() if v is not None}
    if any(d[key] != v for key, v in asserted.items()):
        return "MISMATCH"
    return "ok" if len(asserted) == len(expected) else "ok (partial)"


def _cmd_table(args) -> int:
    rows = fixture_rows(args.suite, include_blank=True)
    out: list[tuple[dict, Optional[dict], str]] = []
    for row in rows:
        if row["p"] is None:
            out.append((row, None, "excluded"))
            continue
        rec = compute(fixture_spec(row), oracle=args.oracle)
        d = rec.as_dict()
        d["p"] = row["p"]
        if not args.timings:
            d["ms"] = {}
        out.append((row, d, _row_status(row, d)))
    records = [d for _, d, _ in out if d is not None]
    if args.format == "json":
        print(json.dumps(records, indent=1))
    elif args.format == "csv":
        sys.stdout.write(_csv(records))
    else:
        header = f"{'k':>2} {'j':>3}  {'p':24s}{'h1':>4} {'Delta':>5} {'h1-D':>5}  {'(w,h)':9s} status"
        print(header)
        for row, d, status in out:
            if d is None:
                print(f"{row['k']:>2} {row['j']:>3}  {'?':24s}{'':>4} {'':>5} {'':>5}  {'':9s} {status}: {row.get('note', '')}")
                continue
            wh = f"({d['width']},{d['height']})"
            print(
                f"{d['k']:>2} {d['j']:>3}  {d['p']:24s}{_fmt(d['h1_end']):>4} {_fmt(d['delta']):>5} "
                f"{_fmt(d['h1_minus_delta']):>5}  {wh:9s} {status}"
            )
    if any(status == "MISMATCH" for _, _, status in out):
        return EXIT_TABLE_MISMATCH
    return EXIT_OK


class _Usage(Exception):
    pass


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        if args.command == "table":
            return _cmd_table(args)
        if args.command == "h0end":
            return _cmd_h0end(args)
        return _cmd_single(args)
    except (_Usage, PolySyntaxError) as exc:
        print(f"zkinv: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BundleError as exc:
        print(f"zkinv: invalid bundle: {exc}", file=sys.stderr)
        return EXIT_ILL_POSED
    except NoStabilization as exc:
        print(f"zkinv: no stabilization: {exc}", file=sys.stderr)
        return EXIT_NO_STABILIZATION
    except OracleMismatch as exc:
        print(f"zkinv: oracle mismatch: {exc}", file=sys.stderr)
        return EXIT_ORACLE


run = main


if __name__ == "__main__":
    sys.exit(main())
