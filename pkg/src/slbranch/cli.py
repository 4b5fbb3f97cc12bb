"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 capacity.
All output is JSON (or CSV with ``--csv``) with rows in canonical order.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import symbols as S
from .classcount import class_table, count_classes, table_to_csv, table_to_json
from .errors import CapacityError
from .numth import EllPrime, PrimePowerQ
from .oracle import GroupSpec, OracleGroup
from .oracle.groups import ORACLE_CAP
from .verify import SUITES, load_grid, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def _check_config(n: int, q: int, ell: int | None) -> None:
    if n < 1:
        raise UsageError(f"n must be >= 1, got {n}")
    try:
        Q = PrimePowerQ(q)
        if ell is not None:
            EllPrime(ell, Q)
    except ValueError as e:
        raise UsageError(str(e)) from e


def _dump(obj) -> str:
    return json.dumps(obj, indent=1)


def _rows_to_csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: json.dumps(v) if isinstance(v, (dict, list)) else v for k, v in r.items()})
    return buf.getvalue()


# -- commands -------------------------------------------------------------------


def cmd_symbols(args) -> int:
    _check_config(args.n, args.q, args.ell)
    cx_rows = args.cx or args.main2
    if cx_rows and (args.theta or args.orbits):
        raise UsageError("--theta and --orbits apply to modular symbols only")
    if cx_rows:
        syms = S.enumerate_cx_symbols(args.n, args.q, args.ell)
    elif args.orbits:
        syms = S.mod_orbit_reps(args.n, args.q, args.ell)
    else:
        syms = S.enumerate_mod_symbols(args.n, args.q, args.ell)
    rows = []
    for s in syms:
        row = {"symbol": str(s), "pairs": [p.to_dict() for p in s.pairs]}
        if args.kappa:
            row["kappa_ell_prime"] = S.kappa_ell_prime(s)
            if cx_rows:
                row["kappa_ell"] = S.kappa_ell_cx(s)
            else:
                row["kappa_ell"] = S.kappa_ell(s)
                row["constituents"] = S.num_constituents(s)
        if args.star:
            row["star"] = str(S.star(s))
        if args.jm:
            row["jm_irreducible"] = S.jm_irreducible(s)
        if args.main2:
            row["main2"] = S.main2_decision(s).to_dict()
        if args.theta:
            row["theta"] = str(S.theta(s))
        rows.append(row)
    print(_rows_to_csv(rows) if args.csv else _dump(rows), end="" if args.csv else "\n")
    return EXIT_OK


def _parametric(n: int, q: int, ell: int, group: str) -> int:
    if group == "gl":
        return count_classes(n, q, ell, "ell_regular", "GL")
    if group == "sl":
        return S.ibr_sl_count(n, q, ell)
    return count_classes(n, q, ell, "ell_regular", "R")


def cmd_count(args) -> int:
    _check_config(args.n, args.q, args.ell)
    mode = args.mode or "parametric"
    out = {"n": args.n, "q": args.q, "ell": args.ell, "group": args.group}
    if mode in ("parametric", "both"):
        out["parametric_ibr"] = _parametric(args.n, args.q, args.ell, args.group)
    if mode in ("oracle", "both"):
        spec = GroupSpec(args.group.upper(), args.n, args.q, args.ell if args.group == "r" else None)
        out["oracle_classes"] = OracleGroup(spec, args.cap).ell_regular_count(args.ell)
    if mode == "both":
        out["agree"] = out["parametric_ibr"] == out["oracle_classes"]
    print(_dump(out))
    return EXIT_OK if out.get("agree", True) else EXIT_FAIL


def cmd_verify(args) -> int:
    grid = load_grid(args.grid)
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = [run_suite(name, grid) for name in names]
    ok = all(r.ok for r in reports)
    if args.lines:
        for r in reports:
            for c in r.cases:
                print(c.line())
            print(f"SUMMARY {r.suite} {json.dumps(r.summary)}")
    else:
        payload = [r.to_dict() for r in reports]
        print(_dump(payload[0] if len(payload) == 1 else {"ok": ok, "reports": payload}))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_classes(args) -> int:
    _check_config(args.n, args.q, args.ell)
    rows = class_table(args.n, args.q, args.ell)
    print(table_to_csv(rows) if args.csv else table_to_json(rows), end="" if args.csv else "\n")
    return EXIT_OK


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="slbranch",
        description="Branching numbers for GL_n(q) -> SL_n(q) with a brute-force oracle.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def nqe(sp, ell_required=True):
        sp.add_argument("n", type=int)
        sp.add_argument("q", type=int)
        if ell_required:
            sp.add_argument("ell", type=int)

    sp = sub.add_parser("symbols", help="list admissible symbols with optional columns")
    nqe(sp)
    sp.add_argument("--orbits", action="store_true", help="orbit representatives only")
    sp.add_argument("--cx", action="store_true", help="complex symbols instead of modular ones")
    sp.add_argument("--kappa", action="store_true", help="branching numbers")
    sp.add_argument("--star", action="store_true", help="image under the star map")
    sp.add_argument("--jm", action="store_true", help="James-Mathas irreducibility")
    sp.add_argument("--main2", action="store_true", help="irreducibility decision (implies --cx)")
    sp.add_argument("--theta", action="store_true", help="complex lift theta(s)")
    sp.add_argument("--csv", action="store_true")
    sp.set_defaults(func=cmd_symbols)

    sp = sub.add_parser("count", help="l-regular class counts, parametric and/or oracle")
    nqe(sp)
    sp.add_argument("group", choices=["gl", "sl", "r"])
    m = sp.add_mutually_exclusive_group()
    m.add_argument("--oracle", dest="mode", action="store_const", const="oracle")
    m.add_argument("--parametric", dest="mode", action="store_const", const="parametric")
    m.add_argument("--both", dest="mode", action="store_const", const="both")
    sp.add_argument("--cap", type=int, default=ORACLE_CAP, help="oracle group-order cap")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("suite", choices=list(SUITES) + ["all"])
    sp.add_argument("--grid", help="JSON list of {n, q, ell}; default grid when omitted")
    sp.add_argument("--lines", action="store_true", help="one PASS/FAIL/SKIP line per case")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("classes", help="conjugacy classes of GL_n(q)")
    nqe(sp, ell_required=False)
    sp.add_argument("--ell", type=int, help="add l-regularity and R_n splitting columns")
    sp.add_argument("--csv", action="store_true")
    sp.set_defaults(func=cmd_classes)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except CapacityError as e:
        print(f"capacity: {e}", file=sys.stderr)
        return EXIT_CAPACITY
    except (UsageError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
