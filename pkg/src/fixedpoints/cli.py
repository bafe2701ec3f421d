"""Command-line front end.

Exit codes: 0 success, 1 an identity or golden comparison failed, 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import counting, qseries, verify
from .partitions import PartitionParseError, format_partition, parse_partition
from .statistics import (
    UndefinedStatisticError,
    crank,
    durfee_rect_rows,
    durfee_side,
    find_fixed_point,
    frobenius_symbol,
    mex_j,
)

GF_KINDS = {
    "fixed": qseries.gf_fixed,
    "all": qseries.gf_all,
    "unfixed": qseries.gf_unfixed,
    "neg_fixed": qseries.gf_neg_fixed,
    "crank_tail": qseries.gf_crank_tail,
}


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def stats_record(text: str, ks, js) -> dict:
    p = parse_partition(text)
    try:
        crank_value = crank(p)
    except UndefinedStatisticError:
        crank_value = None
    fixed = {}
    for k in ks:
        res = find_fixed_point(p, k)
        fixed[str(k)] = res.index if res.found else None
    return {
        "partition": format_partition(p),
        "weight": p.weight,
        "durfee_side": durfee_side(p),
        "durfee_rect_rows": {str(j): durfee_rect_rows(p, j) for j in js},
        "frobenius": str(frobenius_symbol(p)),
        "crank": crank_value,
        "mex_j": {str(j): mex_j(p, j) for j in js if j >= 0},
        "fixed_points": fixed,
    }


def cmd_stats(args) -> tuple[str, int]:
    rec = stats_record(args.partition, args.k or [0], args.j or [0])
    if args.format == "json":
        return dump_json(rec), 0
    if args.format == "csv":
        rows = [["statistic", "parameter", "value"]]
        for key in ("partition", "weight", "durfee_side", "frobenius", "crank"):
            rows.append([key, "", "undefined" if rec[key] is None else rec[key]])
        for group in ("durfee_rect_rows", "mex_j", "fixed_points"):
            for param, value in rec[group].items():
                rows.append([group, param, "none" if value is None else value])
        return _csv(rows), 0
    lines = [
        f"partition      ({rec['partition']})",
        f"weight         {rec['weight']}",
        f"durfee side    {rec['durfee_side']}",
        f"frobenius      {rec['frobenius']}",
        f"crank          {'undefined' if rec['crank'] is None else rec['crank']}",
    ]
    for j, rows in rec["durfee_rect_rows"].items():
        lines.append(f"d_{j:<13}{rows} x {rows + int(j)}")
    for j, m in rec["mex_j"].items():
        lines.append(f"mex_{j:<11}{m}")
    for k, idx in rec["fixed_points"].items():
        where = f"at i={idx}" if idx is not None else "none"
        lines.append(f"{k}-fixed point{'':<{max(1, 2 - len(k))}}{where}")
    return "\n".join(lines) + "\n", 0


def counts_rows(n_max: int, k_max: int, workers: int = 1) -> list[dict]:
    counting.warm_census(range(2, n_max + 1), k_max, workers)
    rows = []
    for n in range(2, n_max + 1):
        c = counting.census(n, k_max)
        row = {"n": n, "p": c.total}
        for k in range(k_max + 1):
            row[f"f_{k}"] = c.fixed[k]
            row[f"g_{k}"] = c.total - c.fixed[k]
        for k in range(1, k_max + 1):
            row[f"f_-{k}"] = c.fixed[-k]
            row[f"p(n,{k - 1})"] = c.short[k]
            row[f"g'_-{k}"] = c.unfixed_neg[k]
        rows.append(row)
    return rows


def cmd_counts(args) -> tuple[str, int]:
    if args.crank_table:
        return counting.crank_table(2, args.n_max).to_csv(), 0
    rows = counts_rows(args.n_max, args.k_max, args.parallel)
    if args.format == "json":
        return dump_json(rows), 0
    header = list(rows[0]) if rows else ["n", "p"]
    if args.format == "csv":
        return _csv([header] + [[r[h] for h in header] for r in rows]), 0
    widths = [max(len(h), *(len(str(r[h])) for r in rows)) for h in header]
    out = [" ".join(h.rjust(w) for h, w in zip(header, widths))]
    for r in rows:
        out.append(" ".join(str(r[h]).rjust(w) for h, w in zip(header, widths)))
    return "\n".join(out) + "\n", 0


def cmd_table1(args) -> tuple[str, int]:
    report = verify.reproduce_table1()
    golden = verify.load_table1()
    ks = sorted({k for k, _ in golden})
    ns = sorted({n for _, n in golden})
    computed = {(c.params["k"], c.params["n"]): c.lhs
                for c in report.cells if "claim" not in c.params}
    code = 0 if report.ok else 1
    if args.format == "json":
        return dump_json({"ok": report.ok, "rows": {str(k): [computed[k, n] for n in ns] for k in ks},
                          "n": ns, "mismatches": [c.to_dict() for c in report.failures]}), code
    rows = [["k\\n"] + ns] + [[k] + [computed[k, n] for n in ns] for k in ks]
    if args.format == "csv":
        return _csv(rows), code
    out = []
    for row in rows:
        out.append(" ".join(str(x).rjust(4) for x in row))
    out.append("matches golden table" if report.ok else f"{len(report.failures)} mismatches")
    return "\n".join(out) + "\n", code


def cmd_gf(args) -> tuple[str, int]:
    build = GF_KINDS[args.kind]
    try:
        series = build(args.param, args.order)
    except ValueError as exc:
        return f"error: {exc}\n", 2
    if args.format == "json":
        return dump_json({"kind": args.kind, "param": args.param, "order": args.order,
                          "coeffs": series.to_json()}), 0
    if args.format == "csv":
        return _csv([["n", "coefficient"]] + [[n, c] for n, c in enumerate(series.coeffs)]), 0
    return str(series) + f" + O(q^{args.order + 1})\n", 0


def cmd_verify(args) -> tuple[str, int]:
    ranges = verify.Ranges(
        n_max=args.n_max, k_max=args.k_max, j_min=args.j_min, j_max=args.j_max,
        order=args.order, series_n_max=args.series_n_max, parallel=args.parallel,
    )
    reports = verify.run_suite(args.suite, ranges)
    code = 0 if all(r.ok for r in reports) else 1
    if args.format == "json":
        return dump_json([r.to_dict() for r in reports]), code
    if args.format == "csv":
        rows = [["identity_id", "params", "lhs", "rhs", "pass"]]
        for r in reports:
            for c in r.cells:
                rows.append([r.identity_id, json.dumps(c.params, sort_keys=True),
                             c.lhs, c.rhs, c.passed])
        return _csv(rows), code
    return "\n".join(r.render_text() for r in reports) + "\n", code


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"{value} is negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    default_parallel = int(os.environ.get("FIXEDPOINTS_PARALLEL", "1"))
    parser = argparse.ArgumentParser(
        prog="fixedpoints",
        description="Partition fixed points, crank ranges and generating-function checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p, default="text"):
        p.add_argument("--format", choices=("text", "json", "csv"), default=default)

    p = sub.add_parser("stats", help="statistics of one partition")
    p.add_argument("partition", help='comma-separated parts, e.g. "5,3,3,3,1"; "" for empty')
    p.add_argument("--k", type=int, action="append", help="k-fixed point parameter (repeatable)")
    p.add_argument("--j", type=int, action="append", help="mex_j / d_j parameter (repeatable)")
    fmt(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("counts", help="f_k, g_k and the negative-parameter split per n")
    p.add_argument("--n-max", type=_nonneg, default=40)
    p.add_argument("--k-max", type=_nonneg, default=6)
    p.add_argument("--parallel", type=_nonneg, default=default_parallel)
    p.add_argument("--crank-table", action="store_true", help="emit M(m,n) as CSV instead")
    fmt(p, "csv")
    p.set_defaults(func=cmd_counts)

    p = sub.add_parser("table1", help="crank-range counts for 0<=k<=5, 2<=n<=15")
    fmt(p)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("gf", help="expand a generating function")
    p.add_argument("kind", choices=sorted(GF_KINDS))
    p.add_argument("--k", "--j", dest="param", type=int, default=0,
                   help="k for fixed/all/unfixed/neg_fixed, j for crank_tail")
    p.add_argument("--order", type=_nonneg, default=20)
    fmt(p)
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("verify", help="run identity suites")
    p.add_argument("suite", nargs="?", default="all", choices=("all",) + verify.SUITES)
    p.add_argument("--n-max", type=_nonneg, default=40)
    p.add_argument("--k-max", type=_nonneg, default=6)
    p.add_argument("--j-min", type=int, default=-5)
    p.add_argument("--j-max", type=int, default=5)
    p.add_argument("--order", type=_nonneg, default=100)
    p.add_argument("--series-n-max", type=_nonneg, default=200)
    p.add_argument("--parallel", type=_nonneg, default=default_parallel)
    fmt(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.j_min > args.j_max:
        parser.error("--j-min exceeds --j-max")
    if args.command in ("counts", "verify") and args.n_max < 2:
        parser.error("--n-max must be at least 2")
    try:
        text, code = args.func(args)
    except PartitionParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if code == 2:
        sys.stderr.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
