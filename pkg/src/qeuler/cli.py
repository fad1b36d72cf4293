"""Command-line front end.

Subcommands: euler (tables of twisted Euler numbers), bernstein (basis
polynomial values), integrate (basis integrands against the alternating
measure), verify (the identity catalog over a grid), crosscheck (exact vs
numeric valuation tables).  Exit statuses: 0 success, 1 identity failure,
2 invalid parameters, 3 I/O error.

The environment variable QEULER_OUTPUT_DIR, when set, resolves relative
output paths.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from .cyclotomic import PoleError, eval_at_q_rational, is_odd_prime
from .identities import (
    GridSpec,
    MUTANTS,
    THEOREM_IDS,
    Workspace,
    numeric_crosscheck,
    reports_to_json,
    run_grid,
    summary_table,
)
from .padic import PadicConfig
from .qspecial import EulerCache, EulerParams, bernstein, bernstein_moment_poly


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="qeuler",
        description="Exact twisted (h,q)-Euler numbers, q-Bernstein polynomials, "
        "identity verification, and p-adic cross-checks.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, with_params=True):
        if with_params:
            p.add_argument("--p", type=int, default=3, help="odd prime (default 3)")
            p.add_argument("--m", type=int, default=1, help="root-of-unity level (default 1)")
            p.add_argument("--h", type=int, default=1, help="integer weight (default 1)")
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--output", default=None, help="output path (default stdout)")

    p = sub.add_parser("euler", help="table of twisted Euler numbers E_0..E_n")
    common(p)
    p.add_argument("--n", type=int, default=4, help="highest degree (default 4)")
    p.add_argument("--at-q", default=None, metavar="Q0",
                   help="also evaluate at a rational q (e.g. 1 or 2/3)")

    p = sub.add_parser("bernstein", help="basis polynomial value B_{k,n}(x, q)")
    common(p, with_params=False)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", type=int, required=True)

    p = sub.add_parser("integrate", help="integral of a basis integrand "
                       "(or a same-k product) against the alternating measure")
    common(p)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--n", default="1",
                   help="degree, or comma list n1,n2,... for a product (default 1)")

    p = sub.add_parser("verify", help="run the identity catalog over a grid")
    common(p, with_params=False)
    p.add_argument("--primes", default="3,5")
    p.add_argument("--levels", default="0,1")
    p.add_argument("--weights", default="-2..3", help="h range lo..hi or comma list")
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--x-range", default="-3..4")
    p.add_argument("--ni-max", type=int, default=4)
    p.add_argument("--s-values", default="2,3")
    p.add_argument("--theorems", default=None,
                   help="comma list restricting the catalog (default all)")
    p.add_argument("--report", default="identity_report.json",
                   help="JSON report path (default identity_report.json)")
    p.add_argument("--inject-mutant", default=None, choices=sorted(MUTANTS),
                   help="test harness: run with a known-broken checker")

    p = sub.add_parser("crosscheck", help="valuations of exact-minus-truncated differences")
    common(p)
    p.add_argument("--n", type=int, default=4, help="highest moment degree (default 4)")
    p.add_argument("--K", type=int, default=12, help="precision exponent (default 12)")
    p.add_argument("--q0", type=int, default=None, help="base point (default 1+p)")
    p.add_argument("--levels", default=None,
                   help="comma list of truncation levels (default m+1,m+2,m+3)")
    return top


def _parse_int_list(text: str) -> list[int]:
    return [int(v) for v in text.split(",") if v.strip() != ""]


def _parse_range(text: str) -> tuple[int, ...]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return tuple(range(int(lo), int(hi) + 1))
    return tuple(_parse_int_list(text))


def _require_params(p: int, m: int, h: int) -> EulerParams:
    if not is_odd_prime(p):
        raise CliError(f"p must be an odd prime, got {p}", 2)
    if m < 0:
        raise CliError(f"level m must be >= 0, got {m}", 2)
    return EulerParams(p, m, h)


def _resolve_output(path: str | None) -> str | None:
    if path is None:
        return None
    base = os.environ.get("QEULER_OUTPUT_DIR")
    if base and not os.path.isabs(path):
        return os.path.join(base, path)
    return path


def _emit(text: str, path: str | None):
    path = _resolve_output(path)
    if path is None:
        print(text)
        return
    try:
        with open(path, "w") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")
    except OSError as err:
        raise CliError(f"cannot write {path}: {err}", 3) from None


def _rows_to_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _cmd_euler(args) -> int:
    params = _require_params(args.p, args.m, args.h)
    if args.n < 0:
        raise CliError("--n must be >= 0", 2)
    cache = EulerCache(params)
    at_q = Fraction(args.at_q) if args.at_q is not None else None
    rows = []
    for n in range(args.n + 1):
        value = cache.euler_number(n)
        row = {"n": n, "value": value.to_text()}
        if at_q is not None:
            try:
                row["at_q"] = eval_at_q_rational(value, at_q).to_text()
            except PoleError as err:
                raise CliError(str(err), 2) from None
        rows.append(row)
    if args.format == "json":
        payload = {"p": params.p, "m": params.m, "h": params.h, "rows": rows}
        _emit(json.dumps(payload, indent=1), args.output)
    elif args.format == "csv":
        header = ["n", "value"] + (["at_q"] if at_q is not None else [])
        _emit(_rows_to_csv(header, [[r[k] for k in header] for r in rows]), args.output)
    else:
        lines = []
        for r in rows:
            lines.append(f"E_{r['n']} = {r['value']}")
            if "at_q" in r:
                lines.append(f"    at q = {at_q}: {r['at_q']}")
        _emit("\n".join(lines), args.output)
    return 0


def _cmd_bernstein(args) -> int:
    if not 0 <= args.k <= args.n:
        raise CliError(f"need 0 <= k <= n, got k={args.k}, n={args.n}", 2)
    value = bernstein(args.k, args.n, args.x)
    if args.format == "json":
        payload = {"k": args.k, "n": args.n, "x": args.x, "value": value.to_text()}
        _emit(json.dumps(payload, indent=1), args.output)
    elif args.format == "csv":
        _emit(_rows_to_csv(["k", "n", "x", "value"],
                           [[args.k, args.n, args.x, value.to_text()]]), args.output)
    else:
        _emit(f"B_{{{args.k},{args.n}}}({args.x}, q) = {value.to_text()}", args.output)
    return 0


def _cmd_integrate(args) -> int:
    params = _require_params(args.p, args.m, args.h)
    try:
        degrees = _parse_int_list(args.n)
    except ValueError:
        raise CliError(f"bad degree list {args.n!r}", 2) from None
    if not degrees or any(n < 0 for n in degrees) or args.k < 0:
        raise CliError("degrees and k must be >= 0", 2)
    if any(args.k > n for n in degrees):
        raise CliError(f"k = {args.k} exceeds a factor degree in {degrees}", 2)
    cache = EulerCache(params)
    mp = bernstein_moment_poly(args.k, degrees[0])
    for n in degrees[1:]:
        mp = mp * bernstein_moment_poly(args.k, n)
    value = cache.integrate(mp)
    if args.format == "json":
        payload = {"p": params.p, "m": params.m, "h": params.h,
                   "k": args.k, "degrees": degrees, "value": value.to_text()}
        _emit(json.dumps(payload, indent=1), args.output)
    elif args.format == "csv":
        _emit(_rows_to_csv(["k", "degrees", "value"],
                           [[args.k, " ".join(map(str, degrees)), value.to_text()]]),
              args.output)
    else:
        _emit(value.to_text(), args.output)
    return 0


def _cmd_verify(args) -> int:
    try:
        primes = tuple(_parse_int_list(args.primes))
        levels = tuple(_parse_int_list(args.levels))
        weights = _parse_range(args.weights)
        x_range = _parse_range(args.x_range)
        s_values = tuple(_parse_int_list(args.s_values))
    except ValueError as err:
        raise CliError(f"bad grid argument: {err}", 2) from None
    for p in primes:
        if not is_odd_prime(p):
            raise CliError(f"p must be an odd prime, got {p}", 2)
    theorems = THEOREM_IDS
    if args.theorems:
        theorems = tuple(t.strip() for t in args.theorems.split(","))
        unknown = set(theorems) - set(THEOREM_IDS)
        if unknown:
            raise CliError(f"unknown theorem ids: {sorted(unknown)}", 2)
    grid = GridSpec(
        primes=primes, levels=levels, weights=weights, n_max=args.n_max,
        x_range=x_range, s_values=s_values, ni_max=args.ni_max, theorems=theorems,
    )
    reports, summary = run_grid(grid, Workspace(), mutant=args.inject_mutant)
    if args.report:
        _emit(reports_to_json(reports), args.report)
    text = summary_table(summary)
    if args.format == "json":
        _emit(json.dumps(summary, indent=1), args.output)
    else:
        _emit(text, args.output)
    return 0 if summary["failed"] == 0 else 1


def _cmd_crosscheck(args) -> int:
    params = _require_params(args.p, args.m, args.h)
    if args.K < 2:
        raise CliError("precision K must be >= 2", 2)
    q0 = args.q0 if args.q0 is not None else 1 + args.p
    if q0 % args.p != 1:
        raise CliError(f"q0 must be congruent to 1 mod p, got {q0}", 2)
    cfg = PadicConfig(args.p, args.K, args.m, q0)
    if args.levels is not None:
        levels = _parse_int_list(args.levels)
    else:
        levels = [args.m + 1, args.m + 2, args.m + 3]
    if any(N < args.m for N in levels) or any(
        b <= a for a, b in zip(levels, levels[1:])
    ):
        raise CliError(f"levels must be increasing and >= m, got {levels}", 2)
    report = numeric_crosscheck(args.n, params, cfg, levels)
    if args.format == "json":
        _emit(json.dumps(report, indent=1), args.output)
    elif args.format == "csv":
        rows = [
            [row["n"], N, v]
            for row in report["rows"]
            for N, v in zip(report["levels"], row["valuations"])
        ]
        _emit(_rows_to_csv(["n", "N", "valuation"], rows), args.output)
    else:
        lines = [f"levels: {report['levels']}"]
        for row in report["rows"]:
            flag = "" if row["non_decreasing"] else "   <-- not monotone"
            lines.append(f"n={row['n']}: {row['valuations']}{flag}")
        lines.append(f"all non-decreasing: {report['all_non_decreasing']}")
        _emit("\n".join(lines), args.output)
    return 0


_COMMANDS = {
    "euler": _cmd_euler,
    "bernstein": _cmd_bernstein,
    "integrate": _cmd_integrate,
    "verify": _cmd_verify,
    "crosscheck": _cmd_crosscheck,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        # argparse exits with 2 on bad usage, matching the invalid-parameter code
        return int(err.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except CliError as err:
        print(f"qeuler: {err}", file=sys.stderr)
        return err.code
    except ValueError as err:
        print(f"qeuler: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
