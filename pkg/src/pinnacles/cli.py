"""``pinnacle`` command line tool.

    pinnacle check-set 3,5,8,9,13,14 --profile
    pinnacle check-ordering 10,6,4,11,8 --witness
    pinnacle orderings 4,6,8,10,11 --count-only
    pinnacle maximal 3,6,9
    pinnacle oracle verify --n 7
    pinnacle oracle scan --n 7 --set 3,5,7

Exit status: 0 on success, 1 for a negative answer under ``--strict``,
2 for usage errors (bad input, or an inadmissible set where an admissible
one is required).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import core, oracle
from .core import PinnacleError, PinnacleOrdering, PinnacleSet

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _set_arg(text: str) -> PinnacleSet:
    try:
        return PinnacleSet.parse(text)
    except PinnacleError as exc:
        raise UsageError(f"bad set {text!r}: {exc}") from None


def _ordering_arg(text: str) -> PinnacleOrdering:
    try:
        return PinnacleOrdering.parse(text)
    except PinnacleError as exc:
        raise UsageError(f"bad ordering {text!r}: {exc}") from None


def _require_admissible(s: PinnacleSet) -> None:
    if not core.is_admissible_set(s):
        raise UsageError(str(core.InadmissibleSetError(s)))


def _profile_rows(s: PinnacleSet) -> list[dict]:
    return [
        {
            "x": e.x,
            "rank": e.rank,
            "small_pinnacles": e.small_pinnacles,
            "small_nonpinnacles": e.small_nonpinnacles,
            "k": e.slack,
        }
        for e in core.k_profile(s)
    ]


def _report_rows(report: core.InterruptionReport) -> list[dict]:
    return [
        {"x": r.x, "allowed": r.allowed, "actual": r.actual, "violated": r.violated}
        for r in report.per_x
    ]


def _csv(rows: list[dict], columns: list[str]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _table(rows: list[dict], columns: list[str]) -> str:
    if not rows:
        return ""
    cells = [[str(r[c]).lower() if isinstance(r[c], bool) else str(r[c]) for c in columns] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(columns)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(columns, widths))]
    lines += ["  ".join(v.rjust(w) for v, w in zip(row, widths)) for row in cells]
    return "\n".join(lines)


def _yn(flag: bool) -> str:
    return "true" if flag else "false"


# each command returns (payload for json, text for lines, text for csv, answer)
# where answer is None or the boolean that --strict turns into an exit status


def cmd_check_set(args):
    s = _set_arg(args.set)
    admissible = core.is_admissible_set(s)
    result = {"admissible": admissible}
    lines = [f"admissible: {_yn(admissible)}"]
    answer = admissible
    rows = _profile_rows(s)
    if args.maximal:
        maximal = admissible and core.is_maximally_admissible(s)
        result["maximally_admissible"] = maximal
        lines.append(f"maximally admissible: {_yn(maximal)}")
        answer = maximal
    if args.profile:
        result["profile"] = rows
        lines.append(_table(rows, list(rows[0]) if rows else []))
    columns = ["x", "rank", "small_pinnacles", "small_nonpinnacles", "k"]
    csv_text = _csv([{**r, "admissible": admissible} for r in rows], columns + ["admissible"])
    return {"set": str(s)}, result, "\n".join(l for l in lines if l), csv_text, answer


def cmd_maximal(args):
    s = _set_arg(args.set)
    _require_admissible(s)
    maximal = core.is_maximally_admissible(s)
    text = f"maximally admissible: {_yn(maximal)}"
    return {"set": str(s)}, {"maximally_admissible": maximal}, text, _csv(
        [{"set": str(s), "maximally_admissible": maximal}], ["set", "maximally_admissible"]
    ), maximal


def cmd_check_ordering(args):
    a = _ordering_arg(args.ordering)
    _require_admissible(a.base)
    report = core.interruption_report(a)
    if args.reduced:
        admissible = core.is_admissible_ordering_reduced(a)
    else:
        admissible = report.admissible
    rows = _report_rows(report)
    result = {
        "admissible": admissible,
        "checker": "reduced" if args.reduced else "full",
        "report": rows,
        "violations": [r["x"] for r in rows if r["violated"]],
    }
    lines = [f"admissible: {_yn(admissible)}"]
    if args.reduced:
        result["checked"] = list(core.reduced_check_elements(a.base))
        lines.append("checked: " + ",".join(map(str, result["checked"])))
    for r in report.violations:
        lines.append(f"violation at x={r.x}: interrupted {r.actual} times, allowed {r.allowed}")
    lines.append(_table(rows, ["x", "allowed", "actual", "violated"]))
    if args.witness and admissible:
        w = core.construct_witness(a)
        result["witness"] = str(w)
        lines.append(f"witness: {w}")
    csv_text = _csv(rows, ["x", "allowed", "actual", "violated"])
    return {"ordering": str(a)}, result, "\n".join(l for l in lines if l), csv_text, admissible


def cmd_orderings(args):
    s = _set_arg(args.set)
    _require_admissible(s)
    if args.count_only:
        count = core.count_admissible_orderings(s)
        return {"set": str(s)}, count, str(count), _csv([{"count": count}], ["count"]), None
    found = [str(a) for a in core.enumerate_admissible_orderings(s)]
    return (
        {"set": str(s)},
        found,
        "\n".join(found),
        _csv([{"ordering": a} for a in found], ["ordering"]),
        None,
    )


def _check_n(n: int) -> None:
    if not 1 <= n <= oracle.MAX_N:
        raise UsageError(f"--n must be in 1..{oracle.MAX_N}, got {n}")


def cmd_oracle_verify(args):
    _check_n(args.n)
    report = oracle.verify_against_core(args.n)
    mismatches = [str(m) for m in report.mismatches]
    result = {
        "sets_checked": report.sets_checked,
        "orderings_checked": report.orderings_checked,
        "mismatches": mismatches,
    }
    text = "\n".join([f"{len(mismatches)} mismatches"] + mismatches)
    csv_text = _csv([{"mismatch": m} for m in mismatches], ["mismatch"])
    return {"n": args.n}, result, text, csv_text, report.ok


def cmd_oracle_scan(args):
    _check_n(args.n)
    res = oracle.scan(args.n)
    inputs = {"n": args.n}
    if args.dump:
        oracle.dump_csv(res, args.dump)
        inputs["dump"] = args.dump
    rows = [{"set": s, "ordering": a, "count": c} for s, a, c in res.rows()]
    if args.set is not None:
        s = _set_arg(args.set)
        inputs["set"] = str(s)
        rows = [r for r in rows if r["set"] == str(s)]
    if rows:
        text = "\n".join(f"{r['set']}  {r['ordering']}  {r['count']}" for r in rows)
    else:
        text = "no non-empty pinnacle sets" if args.set is None else "no realized orderings"
    return inputs, rows, text, _csv(rows, ["set", "ordering", "count"]), None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["lines", "json", "csv"], default="lines")
    common.add_argument("--strict", action="store_true", help="exit 1 when the answer is negative")

    parser = argparse.ArgumentParser(prog="pinnacle", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-set", parents=[common], help="is a set an admissible pinnacle set")
    p.add_argument("set")
    p.add_argument("--profile", action="store_true", help="print the slack profile")
    p.add_argument("--maximal", action="store_true", help="also test maximal admissibility")
    p.set_defaults(func=cmd_check_set)

    p = sub.add_parser("check-ordering", parents=[common], help="is an ordering admissible")
    p.add_argument("ordering")
    p.add_argument("--reduced", action="store_true", help="use the reduced set of checks")
    p.add_argument("--witness", action="store_true", help="print a witness permutation")
    p.set_defaults(func=cmd_check_ordering)

    p = sub.add_parser("orderings", parents=[common], help="list admissible orderings")
    p.add_argument("set")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_orderings)

    p = sub.add_parser("maximal", parents=[common], help="are all orderings admissible")
    p.add_argument("set")
    p.set_defaults(func=cmd_maximal)

    p = sub.add_parser("oracle", help="exhaustive scans of S_n")
    osub = p.add_subparsers(dest="oracle_command", required=True)
    q = osub.add_parser("verify", parents=[common], help="cross-check the core at n")
    q.add_argument("--n", type=int, required=True)
    q.set_defaults(func=cmd_oracle_verify)
    q = osub.add_parser("scan", parents=[common], help="realized orderings and counts")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--set", default=None)
    q.add_argument("--dump", default=None, metavar="PATH", help="write the full scan as CSV")
    q.set_defaults(func=cmd_oracle_scan)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        inputs, result, text, csv_text, answer = args.func(args)
    except UsageError as exc:
        print(f"pinnacle: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.format == "json":
        print(json.dumps({"input": inputs, "result": result}))
    elif args.format == "csv":
        print(csv_text)
    elif text:
        print(text)
    if args.strict and answer is False:
        return EXIT_FALSE
    return EXIT_OK


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
