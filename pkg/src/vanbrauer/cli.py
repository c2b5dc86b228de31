"""Command line front end.

Exit codes: 0 success, 1 a verification failed, 2 usage or invalid ``(tau, n)``.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import cubic
from .cubic import InvalidCaseError
from .intlin import Matrix
from .lattice import Lattice, LatticeError, direct_sum, discriminant_group, is_even, signature

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _json_value(x):
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return str(x) if not -(2**63) <= x < 2**63 else x
    if isinstance(x, dict):
        return {k: _json_value(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_json_value(v) for v in x]
    return str(x)


def dumps(obj) -> str:
    """Stable-keyed JSON, newline terminated."""
    return json.dumps(_json_value(obj), sort_keys=True) + "\n"


def _fmt_gram(rows) -> str:
    return "[" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in rows) + "]"


def cmd_classify(args, out) -> int:
    report = cubic.case_report(args.tau, args.n)
    if args.format == "json":
        out.write(dumps(report.to_json()))
        return EXIT_OK
    data = report.to_json()
    rows = [
        ("case", f"tau={report.tau}, n={report.n}"),
        ("Pic(S)", _fmt_gram(data["pic_gram"])),
        ("det Pic", data["det_pic"]),
        ("det M", data["det_M"]),
        ("alpha_van", data["brauer_kind"]),
        ("alpha_X + alpha_van", data["sum_kind"]),
        ("relation to alpha_X", data["clifford_relation"]),
        ("det factor", data["det_relation_factor"]),
        ("admissible", "yes" if report.admissible else "no"),
    ]
    width = max(len(k) for k, _ in rows)
    for k, v in rows:
        out.write(f"{k.ljust(width)}  {v}\n")
    return EXIT_OK


def _check_case(job):
    tau, n, kernel, inject = job
    override = None
    if inject:
        g = cubic.picard_lattice(tau, n).tolist()
        g[1][1] += 2
        override = Matrix(g)
    return (tau, n), cubic.case_checks(tau, n, kernel=kernel, pic_override=override)


def cmd_verify_theorem(args, out) -> int:
    cases = cubic.valid_cases(args.n_max)
    jobs = [(tau, n, n <= args.kernel_n_max, args.inject_fault) for tau, n in cases]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_check_case, jobs, chunksize=8))
    else:
        results = [_check_case(j) for j in jobs]
    results.sort()
    passed = failed = 0
    failures = []
    for (tau, n), checks in results:
        for name, ok in checks.items():
            if ok:
                passed += 1
            else:
                failed += 1
                failures.append({"tau": tau, "n": n, "check": name})
    skipped = sorted(p for p in cubic.EXCLUDED if p[1] <= args.n_max)
    if args.format == "json":
        out.write(
            dumps(
                {
                    "cases": len(results),
                    "checks_passed": passed,
                    "checks_failed": failed,
                    "failures": failures,
                    "excluded": [list(p) for p in skipped],
                }
            )
        )
    else:
        for f in failures:
            out.write(f"FAIL tau={f['tau']} n={f['n']}: {f['check']}\n")
        excl = ", ".join(f"({t},{n})" for t, n in skipped) or "none"
        out.write(f"cases: {len(results)}  checks passed: {passed}  failed: {failed}  excluded pairs skipped: {excl}\n")
    return EXIT_OK if failed == 0 else EXIT_FAIL


def cmd_glue_check(args, out) -> int:
    items = cubic.glue_audit()
    ga = cubic.build_glued_ambient() if all(i.ok for i in items if i.required) else None
    groups = {
        "K8": discriminant_group(cubic.K8).invariant_factors,
        "T_alpha": discriminant_group(cubic.T_GAMMA).invariant_factors,
        "T_alpha (with Λ')": discriminant_group(direct_sum(cubic.T_GAMMA, cubic.LAMBDA_PRIME)).invariant_factors,
    }
    if ga is not None:
        groups["L"] = discriminant_group(ga.l).invariant_factors
    ok = all(i.ok for i in items if i.required)
    if args.format == "json":
        out.write(
            dumps(
                {
                    "checks": [
                        {"name": i.name, "ok": i.ok, "detail": i.detail, "required": i.required} for i in items
                    ],
                    "discriminant_groups": {k: list(v) for k, v in groups.items()},
                    "ok": ok,
                }
            )
        )
    else:
        for i in items:
            status = "PASS" if i.ok else ("FAIL" if i.required else "FAIL (informational)")
            detail = f"  [{i.detail}]" if i.detail and not i.ok else ""
            out.write(f"{status:<22}{i.name}{detail}\n")
        for k, v in groups.items():
            out.write(f"discriminant group {k}: {list(v)}\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_lookup(args, out) -> int:
    try:
        cands = cubic.inverse_lookup(args.c)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        out.write(dumps({"c": args.c, "candidates": [list(p) for p in cands]}))
    else:
        for tau, n in cands:
            out.write(f"tau={tau} n={n}\n")
    return EXIT_OK


def _admissible_table(n_max: int) -> list[list[str]]:
    rows = [["tau\\n"] + [str(n) for n in range(2, n_max + 1)]]
    for tau in range(5):
        row = [str(tau)]
        for n in range(2, n_max + 1):
            if (tau, n) in cubic.EXCLUDED:
                row.append("x")
            else:
                row.append("Y" if cubic.admissible(tau, n) else ".")
        rows.append(row)
    return rows


def cmd_admissible(args, out) -> int:
    if args.table is not None:
        if args.table < 2:
            print("error: --table needs a bound >= 2", file=sys.stderr)
            return EXIT_USAGE
        table = _admissible_table(args.table)
        if args.format == "json":
            out.write(dumps({"n_max": args.table, "rows": table}))
        else:
            width = max(len(c) for r in table for c in r)
            for r in table:
                out.write(" ".join(c.rjust(width) for c in r) + "\n")
            out.write("Y admissible, . not admissible, x excluded pair\n")
        return EXIT_OK
    if args.tau is None or args.n is None:
        print("error: give --tau and --n, or --table", file=sys.stderr)
        return EXIT_USAGE
    value = cubic.admissible(args.tau, args.n)
    if args.format == "json":
        out.write(dumps({"tau": args.tau, "n": args.n, "admissible": value}))
    else:
        out.write("yes\n" if value else "no\n")
    return EXIT_OK


def cmd_abbv_check(args, out) -> int:
    ok = cubic.abbv_example_check()
    r = cubic.case_report(4, 5)
    if args.format == "json":
        out.write(dumps({"ok": ok, "candidates": [list(p) for p in cubic.inverse_lookup(-2)], "case": r.to_json()}))
    else:
        out.write("Pic(S) = [[2, 2], [2, -2]] ~ [[2, 0], [0, -4]]\n")
        out.write(f"candidates: {cubic.inverse_lookup(-2)}\n")
        out.write(f"(4,5): {r.brauer.kind}, sum {r.sum_class.kind}, admissible={r.admissible}, det M={r.det_m}\n")
        out.write("PASS\n" if ok else "FAIL\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_lattice_info(args, out) -> int:
    text = sys.stdin.read() if args.file == "-" else open(args.file).read()
    try:
        L = Lattice.from_json(text)
    except (LatticeError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    info = {
        "rank": L.rank,
        "det": L.det,
        "signature": list(signature(L)),
        "even": is_even(L),
        "discriminant_group": list(discriminant_group(L).invariant_factors),
    }
    out.write(dumps(info))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vanbrauer",
        description="Vanishing Brauer classes of K3 double planes attached to cubic fourfolds with a plane.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("table", "json"), default="table")

    p = sub.add_parser("classify", help="report one (tau, n) case")
    p.add_argument("--tau", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    fmt(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify-theorem", help="check every identity for all cases with n <= N")
    p.add_argument("--n-max", type=int, default=50)
    p.add_argument("--kernel-n-max", type=int, default=10, help="run the kernel comparison for n up to this bound")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    fmt(p)
    p.set_defaults(func=cmd_verify_theorem)

    p = sub.add_parser("glue-check", help="audit the unimodular lattice L")
    fmt(p)
    p.set_defaults(func=cmd_glue_check)

    p = sub.add_parser("lookup", help="cases with Picard lattice diag(2, 2c)")
    p.add_argument("--c", type=int, required=True)
    fmt(p)
    p.set_defaults(func=cmd_lookup)

    p = sub.add_parser("admissible", help="admissibility of one case or a table")
    p.add_argument("--tau", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--table", type=int, metavar="N_MAX")
    fmt(p)
    p.set_defaults(func=cmd_admissible)

    p = sub.add_parser("abbv-check", help="the pfaffian example with Pic = ((2,2),(2,-2))")
    fmt(p)
    p.set_defaults(func=cmd_abbv_check)

    p = sub.add_parser("lattice-info", help="invariants of a lattice given as JSON {rank, gram}")
    p.add_argument("file", nargs="?", default="-")
    p.set_defaults(func=cmd_lattice_info)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except InvalidCaseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
