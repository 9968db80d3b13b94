"""Command-line front end: ``python -m flipclasses <command> ...``.

Exit codes: 0 success, 1 a verification found a failing instance, 2 usage error.
JSON is the machine format of record; ``--format table`` is for people.
Timing goes to stderr so that stdout is identical for identical inputs.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from . import verify as V
from .atlas import classification_table, euler_char, f_vector, isometry_orbits
from .export import census_to_csv, census_to_dict, of_table_to_csv, of_table_to_dict, rows_to_csv
from .identities import of_table
from .partitions import Partition, format_partition, parse_partition
from .tilings import census, shape_table_dp

log = logging.getLogger("flipclasses")


class UsageError(Exception):
    pass


def _partition_arg(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _fmt_part(p: str) -> str:
    return p if p else "∅"


def _table(header: list[str], rows: list[list]) -> str:
    cells = [header] + [[str(x) for x in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _need_n(n: int, lo: int = 3) -> None:
    if n < lo:
        raise UsageError(f"--n must be at least {lo}")


# Each command returns (result payload, csv text, table text, verdict or None).

def cmd_count(args):
    _need_n(args.n)
    table = shape_table_dp(args.n)
    if args.shape is not None:
        if args.shape.weight != args.n - 2:
            raise UsageError(f"shape {format_partition(args.shape)!r} must have weight n-2 = {args.n - 2}")
        table = {args.shape: table.get(args.shape, 0)}
    shapes = [{"lambda": format_partition(k), "a": v} for k, v in table.items()]
    result = {"n": args.n, "total": sum(table.values()), "shapes": shapes}
    rows = [[args.n, s["lambda"], s["a"]] for s in shapes]
    text = _table(["lambda", "a"], [[_fmt_part(s["lambda"]), s["a"]] for s in shapes])
    text += f"total {result['total']}\n"
    return result, rows_to_csv(["n", "lambda", "a"], rows), text, None


def cmd_classes(args):
    _need_n(args.n)
    shapes = None
    if args.shape is not None:
        if args.shape.weight != args.n - 2:
            raise UsageError(f"shape {format_partition(args.shape)!r} must have weight n-2 = {args.n - 2}")
        shapes = [args.shape]
    c = census(args.n, shapes)
    result = census_to_dict(c, fibers=args.fibers)
    rows = []
    for s in result["shapes"]:
        rows.append([_fmt_part(s["lambda"]), "*", s["a"], s["ae"]])
        for f in s.get("fibers", []):
            rows.append(["", _fmt_part(f["nu"]), f["a"], f["ae"]])
    return result, census_to_csv(c, fibers=args.fibers), _table(["lambda", "nu", "a", "ae"], rows), None


def _verdict(report: dict) -> dict:
    return {"pass": not report["failures"], "checks": [{"check": report["check"], "pass": not report["failures"]}]}


def cmd_verify(args):
    if args.check == "theorem":
        report = V.verify_theorem(args.max_n, args.jobs)
    elif args.check == "euler":
        report = V.verify_euler(args.max_n, args.jobs)
    elif args.check == "columns":
        report = V.verify_columns(args.max_weight, args.jobs)
    else:
        report = V.verify_of(args.max_n, args.jobs)
    csv_text = rows_to_csv(["check", "instances", "failures"], [[report["check"], report["instances"], len(report["failures"])]])
    text = f"{report['check']}: {report['instances']} instances, {len(report['failures'])} failures\n"
    for f in report["failures"]:
        text += "  FAIL " + json.dumps(f, sort_keys=True) + "\n"
    text += "PASS\n" if not report["failures"] else "FAIL\n"
    return report, csv_text, text, _verdict(report)


def cmd_of_table(args):
    t = of_table(args.max_weight, args.max_row_weight)
    result = of_table_to_dict(t, with_terms=args.terms)
    rows = [[_fmt_part(r)] + e for r, e in zip(result["rows"], result["entries"])]
    text = _table(["mu \\ nu"] + [_fmt_part(c) for c in result["cols"]], rows)
    return result, of_table_to_csv(t), text, None


def cmd_fvector(args):
    _need_n(args.n, 4)
    f = f_vector(args.n)
    result = {"n": args.n, "f_vector": f, "euler": euler_char(args.n)}
    csv_text = rows_to_csv(["n", "dim", "f"], [[args.n, i, x] for i, x in enumerate(f)])
    text = f"f-vector of K{args.n - 1}: {tuple(f)}\nEuler characteristic: {result['euler']}\n"
    return result, csv_text, text, None


def cmd_orbits(args):
    _need_n(args.n)
    orbits = isometry_orbits(args.n, args.group, args.dim)
    result = {
        "n": args.n,
        "group": args.group,
        "orbits": [{"size": len(o), "representative": str(o[0]), "members": [str(t) for t in o]} for o in orbits],
    }
    rows = [[args.n, args.group, o["size"], o["representative"]] for o in result["orbits"]]
    text = _table(["size", "representative"], [[r[2], r[3]] for r in rows])
    text += f"{len(orbits)} orbits\n"
    return result, rows_to_csv(["n", "group", "size", "representative"], rows), text, None


def cmd_cells(args):
    _need_n(args.n, 4)
    summary = classification_table(args.n)
    result = summary.to_dict()
    rows = [
        [args.n, c["dim"], c["mu"], c["lambda"] if c["possible"] else "IMPOSSIBLE", c["product_label"], c["count"],
         " ".join(c["representatives"])]
        for c in result["cells"]
    ]
    csv_text = rows_to_csv(["n", "dim", "mu", "lambda", "type", "count", "representatives"], rows)
    return result, csv_text, summary.to_markdown(), None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "table"], default=argparse.SUPPRESS)
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS, help="worker processes for sweeps")

    p = argparse.ArgumentParser(prog="flipclasses", description="Tilings of polygons up to flips.")
    p.add_argument("--format", choices=["json", "csv", "table"], default="json")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("count", parents=[common], help="a_n(λ) by shape")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--shape", type=_partition_arg)
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("classes", parents=[common], help="flip-class counts, optionally by fiber")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--shape", type=_partition_arg)
    s.add_argument("--fibers", action="store_true")
    s.set_defaults(func=cmd_classes)

    s = sub.add_parser("verify", parents=[common], help="exhaustive identity checks")
    vs = s.add_subparsers(dest="check", required=True)
    for name in ("theorem", "euler", "of"):
        v = vs.add_parser(name, parents=[common])
        v.add_argument("--max-n", type=int, required=True)
        v.set_defaults(func=cmd_verify)
    v = vs.add_parser("columns", parents=[common])
    v.add_argument("--max-weight", type=int, required=True)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("of-table", parents=[common], help="overcount factor table")
    s.add_argument("--max-weight", type=int, required=True, help="largest column weight |ν|")
    s.add_argument("--max-row-weight", type=int, help="largest row weight |μ| (default: --max-weight)")
    s.add_argument("--terms", action="store_true", help="include expansion terms in JSON")
    s.set_defaults(func=cmd_of_table)

    s = sub.add_parser("fvector", parents=[common], help="f-vector and Euler characteristic")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_fvector)

    s = sub.add_parser("orbits", parents=[common], help="orbits under rotations or the dihedral group")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--group", choices=["cyclic", "dihedral"], default="dihedral")
    s.add_argument("--dim", type=int)
    s.set_defaults(func=cmd_orbits)

    s = sub.add_parser("cells", parents=[common], help="cell classification table of K_{n-1}")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_cells)
    return p


def main(argv=None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(message)s", stream=sys.stderr)
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1:
        parser.error("--jobs must be >= 1")
    start = time.perf_counter()
    try:
        result, csv_text, text, verdict = args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"flipclasses: error: {exc}", file=sys.stderr)
        return 2
    log.info("elapsed %.3fs", time.perf_counter() - start)

    if args.format == "json":
        params = {k: (format_partition(v) if isinstance(v, Partition) else v)
                  for k, v in sorted(vars(args).items()) if k not in ("func", "format", "jobs", "command", "check")}
        command = args.command + (f" {args.check}" if args.command == "verify" else "")
        report = {"command": command, "parameters": params, "result": result, "verdict": verdict}
        sys.stdout.write(json.dumps(report, indent=2, sort_keys=False) + "\n")
    elif args.format == "csv":
        sys.stdout.write(csv_text)
    else:
        sys.stdout.write(text)
    if verdict is not None and not verdict["pass"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
