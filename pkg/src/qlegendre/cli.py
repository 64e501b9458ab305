"""Command-line front end.

Exit codes: 0 when every selected identity holds, 1 when any fails, 2 on a
usage error (bad flags, out-of-range parameters, unknown identity).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import __version__
from .exactalg import DEFAULT_ORDER, QPoly, QSeries
from .registry import (
    ParamsOutOfRange,
    UnknownIdentity,
    as_coefficient_rows,
    catalog_json,
    get_record,
    verify_all,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _nonneg(text: str) -> int:
    try:
        x = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if x < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {x}")
    return x


def _positive(text: str) -> int:
    x = _nonneg(text)
    if x < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return x


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qlegendre", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"qlegendre {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, output_default="text"):
        p.add_argument("--output", choices=("json", "csv", "text"), default=output_default)

    p = sub.add_parser("verify", help="verify identities over their parameter ranges")
    p.add_argument("ids", nargs="*", help="identity ids (default: all)")
    p.add_argument("--all", action="store_true", help="verify every identity")
    p.add_argument("--Lmax", type=_nonneg, default=25)
    p.add_argument("--vmax", type=_nonneg, default=3)
    p.add_argument("--order", type=_nonneg, default=DEFAULT_ORDER)
    p.add_argument("--jobs", type=_positive, default=1)
    common(p)

    p = sub.add_parser("expand", help="print the coefficients of one side of an identity")
    p.add_argument("id")
    p.add_argument("--side", choices=("lhs", "rhs"), default="lhs")
    p.add_argument("--order", type=_nonneg, default=None, help="truncation order (series records)")
    p.add_argument("--L", type=_nonneg, default=None, help="L (polynomial records)")
    p.add_argument("--v", type=_positive, default=None, help="chain depth")
    common(p)

    p = sub.add_parser("list", help="list the catalog")
    common(p)

    p = sub.add_parser("selftest", help="quick verification at small ranges")
    p.add_argument("--jobs", type=_positive, default=1)
    common(p)
    return parser


def _write_report(report, fmt: str, out) -> None:
    data = report.as_dict()
    if fmt == "json":
        json.dump(data, out, indent=2)
        out.write("\n")
        return
    if fmt == "csv":
        w = csv.writer(out)
        w.writerow(["id", "params", "pass", "exponent", "lhs_coeff", "rhs_coeff", "millis"])
        for r in data["results"]:
            mm = r["first_mismatch"] or {}
            w.writerow([r["id"], json.dumps(r["params"], sort_keys=True), r["pass"],
                        mm.get("exponent", ""), mm.get("lhs_coeff", ""), mm.get("rhs_coeff", ""), r["millis"]])
        return
    by_id: dict[str, list] = {}
    for r in data["results"]:
        by_id.setdefault(r["id"], []).append(r)
    for rid, rows in by_id.items():
        bad = [r for r in rows if not r["pass"]]
        ms = sum(r["millis"] for r in rows)
        status = "PASS" if not bad else "FAIL"
        out.write(f"{status:4}  {rid:14} {len(rows):4} cases  {ms:9.1f} ms\n")
        for r in bad:
            mm = r["first_mismatch"]
            detail = r.get("error") or (
                f"q^{mm['exponent']}: lhs {mm['lhs_coeff']} rhs {mm['rhs_coeff']}" if mm else "mismatch")
            out.write(f"      params {json.dumps(r['params'], sort_keys=True)}  {detail}\n")
    total = len(data["results"])
    failed = sum(not r["pass"] for r in data["results"])
    out.write(f"{total - failed}/{total} cases passed\n")


def cmd_verify(args, out) -> int:
    ids = None if args.all or not args.ids else args.ids
    if ids is not None:
        for rid in ids:
            get_record(rid)
    report = verify_all(args.Lmax, args.vmax, args.order, ids=ids, jobs=args.jobs)
    _write_report(report, args.output, out)
    return EXIT_OK if report.passed else EXIT_FAIL


def _expand_params(record, args) -> dict:
    params = dict(record.default_params())
    if args.order is not None and "order" in record.ranges:
        params["order"] = args.order
    if args.L is not None:
        if "L" not in record.ranges:
            raise ParamsOutOfRange(f"{record.id} has no parameter L")
        params["L"] = args.L
    if args.v is not None:
        if "v" not in record.ranges:
            raise ParamsOutOfRange(f"{record.id} has no parameter v")
        params["v"] = args.v
    return params


def cmd_expand(args, out) -> int:
    record = get_record(args.id)
    params = _expand_params(record, args)
    lhs, rhs = record.sides(params)
    value = lhs if args.side == "lhs" else rhs
    if not isinstance(value, (QPoly, QSeries)):
        raise UsageError(f"{record.id} is not a q-series or polynomial identity")
    rows = as_coefficient_rows(value)
    if isinstance(value, QSeries):
        rows += [(e, 0, 1) for e in range(len(rows), value.order + 1)]
    if args.output == "json":
        json.dump({"id": record.id, "side": args.side, "params": params,
                   "coefficients": [[e, str(n), str(d)] for e, n, d in rows]}, out, indent=2)
        out.write("\n")
    elif args.output == "csv":
        w = csv.writer(out)
        w.writerow(["exponent", "numerator", "denominator"])
        w.writerows(rows)
    else:
        for e, n, d in rows:
            out.write(f"{e}\t{Fraction(n, d)}\n")
    return EXIT_OK


def cmd_list(args, out) -> int:
    data = catalog_json()
    if args.output == "json":
        json.dump(data, out, indent=2)
        out.write("\n")
    elif args.output == "csv":
        w = csv.writer(out)
        w.writerow(["id", "kind", "paper_ref", "quote", "ranges"])
        for r in data:
            w.writerow([r["id"], r["kind"], r["paper_ref"], r["quote"], json.dumps(r["ranges"])])
    else:
        for r in data:
            ranges = " ".join(f"{k}>={lo}" if hi is None else f"{k}in[{lo},{hi}]"
                              for k, (lo, hi) in r["ranges"].items())
            out.write(f"{r['id']:14} {r['kind']:10} {r['paper_ref']:40} {ranges}\n    {r['quote']}\n")
        out.write(f"{len(data)} records\n")
    return EXIT_OK


def cmd_selftest(args, out) -> int:
    report = verify_all(L_max=6, v_max=2, order=60, jobs=args.jobs)
    _write_report(report, args.output, out)
    return EXIT_OK if report.passed else EXIT_FAIL


COMMANDS = {"verify": cmd_verify, "expand": cmd_expand, "list": cmd_list, "selftest": cmd_selftest}


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"qlegendre: usage error: {exc}\n")
    except UnknownIdentity as exc:
        err.write(f"qlegendre: unknown identity {exc.args[0]!r}\n")
    except ParamsOutOfRange as exc:
        err.write(f"qlegendre: {exc}\n")
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
