"""Command-line client for the transform engine.

All subcommands run in-process by default; pass ``--url`` to target a
running service instead (the payloads are the service's request models).
Exit codes: 0 success, 1 usage error, 2 numeric failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__, acceptance
from . import coefficient_catalog as catalog
from .asymptotics import (
    DerivativeTable, hankel0_odd_series, willis_j0_series, willis_j1_series,
)
from .errors import ContourError, ConvergenceError, DomainError
from .mellin_barnes import estimate_growth
from .reports import build_run_report, evaluate_method, report_to_csv

USAGE_ERROR = 1
NUMERIC_ERROR = 2

_SERIES_FNS = {"j0": willis_j0_series, "j1": willis_j1_series, "odd": hankel0_odd_series}


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems exit 1, not argparse's default 2
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    def __init__(self, message):
        self.message = message


def _jdump(obj) -> str:
    return json.dumps(obj, sort_keys=True, default=float)


def build_parser() -> _Parser:
    parser = _Parser(prog="hankelmb",
                     description="Hankel transforms via Mellin-Barnes contours")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_params(p):
        p.add_argument("--example", required=True, help="catalog label a1..a7")
        p.add_argument("--a", type=float, default=None)
        p.add_argument("--c", type=float, default=None)
        p.add_argument("--n", type=int, default=None)
        p.add_argument("--tol", type=float, default=1e-8)
        p.add_argument("--url", default=None, help="base URL of a running service")

    p = sub.add_parser("transform", help="one (example, method, q) evaluation")
    add_params(p)
    p.add_argument("--q", type=float, required=True)
    p.add_argument("--method", default="contour",
                   choices=("contour", "oracle", "closed", "series"))
    p.add_argument("--json", action="store_true")

    for name, default_csv in (("compare", False), ("sweep", True)):
        p = sub.add_parser(name, help="all applicable methods over a q grid"
                           + (" (CSV default)" if default_csv else ""))
        add_params(p)
        p.add_argument("--q-grid", default="",
                       help="comma-separated q values, e.g. 0.5,1,2")
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", action="store_true")
        fmt.add_argument("--csv", action="store_true")
        p.set_defaults(default_csv=default_csv)

    p = sub.add_parser("asymptotic", help="Willis / odd-derivative series from a "
                       "derivative table file (one value per line, index = order)")
    p.add_argument("table", help="path to the derivative table")
    p.add_argument("--method", default="j0", choices=tuple(_SERIES_FNS),
                   help="which expansion: j0, j1, or odd")
    p.add_argument("--q", type=float, required=True)
    p.add_argument("--terms", type=int, default=8)
    p.add_argument("--json", action="store_true")
    p.add_argument("--url", default=None)

    p = sub.add_parser("check-growth", help="fitted growth profile of a coefficient")
    add_params(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("selftest", help="run the full acceptance grid")
    p.add_argument("--json", action="store_true")
    p.add_argument("--url", default=None)
    return parser


def _params_of(args) -> dict:
    return {"a": args.a, "c": args.c, "n": args.n}


def _post(url, path, payload):
    import httpx

    resp = httpx.post(url.rstrip("/") + path, json=payload, timeout=300.0)
    if resp.status_code >= 400:
        raise ContourError(f"service returned {resp.status_code}: {resp.text}")
    return resp.json()


def _cmd_transform(args) -> int:
    if args.url:
        payload = {"example": args.example, "q": args.q, "method": args.method,
                   "tol": args.tol, **_params_of(args)}
        data = _post(args.url, "/transform", payload)
        value, err, diag = data["value"], data["error_estimate"], data["diagnostics"]
    else:
        res = evaluate_method(args.example, args.method, args.q, _params_of(args), args.tol)
        value, err, diag = res.value, res.error_estimate, res.diagnostics
    if args.json:
        print(_jdump({"example": args.example, "method": args.method, "q": args.q,
                      "value": value, "error_estimate": err, "diagnostics": diag}))
    else:
        print(f"{args.example} q={args.q!r} method={args.method}")
        print(f"value = {value!r} +/- {err:.3e}")
        for key in sorted(diag):
            print(f"  {key} = {diag[key]}")
    return 0


def _cmd_compare(args) -> int:
    grid = [float(tok) for tok in args.q_grid.split(",") if tok.strip()]
    as_csv = args.csv or (args.default_csv and not args.json)
    if args.url:
        payload = {"example": args.example, "q_grid": grid, "tol": args.tol,
                   **_params_of(args)}
        data = _post(args.url, "/compare", payload)
        if as_csv:
            lines = ["q,method,value,error,agree"]
            for r in data["rows"]:
                value = repr(r["value"]) if r["value"] is not None else ""
                error = repr(r["error"]) if r["error"] is not None else ""
                agree = "" if r["agree"] is None else str(r["agree"]).lower()
                lines.append(f"{r['q']!r},{r['method']},{value},{error},{agree}")
            print("\n".join(lines))
        else:
            print(_jdump(data))
        return 0
    report = build_run_report(args.example, grid, _params_of(args), args.tol)
    if as_csv:
        print(report_to_csv(report), end="")
    else:
        payload = {
            "example": report.example, "params": report.params,
            "q_values": report.q_values,
            "rows": [{"q": r.q, "method": r.method, "value": r.value,
                      "error": r.error, "agree": r.agree, "message": r.message}
                     for r in report.rows],
            "timings_ms": report.timings_ms,
        }
        print(_jdump(payload))
    return 0


def _read_table(path: str) -> DerivativeTable:
    try:
        with open(path) as fh:
            values = [float(line.strip()) for line in fh if line.strip()]
    except OSError as exc:
        raise _UsageError(f"cannot read derivative table: {exc}")
    except ValueError as exc:
        raise _UsageError(f"bad derivative table line: {exc}")
    if not values:
        raise _UsageError("derivative table is empty")
    return DerivativeTable(values=values, origin=path)


def _cmd_asymptotic(args) -> int:
    table = _read_table(args.table)
    if args.url:
        payload = {"series": args.method, "derivatives": table.values,
                   "q": args.q, "max_terms": args.terms}
        data = _post(args.url, "/asymptotic", payload)
        value, fo, idx = data["value"], data["first_omitted"], data["truncation_index"]
    else:
        res = _SERIES_FNS[args.method](table, args.q, args.terms)
        value, fo, idx = res.value, res.first_omitted, res.truncation_index
    if args.json:
        print(_jdump({"series": args.method, "q": args.q, "value": value,
                      "first_omitted": fo, "truncation_index": idx}))
    else:
        print(f"{args.method} series at q={args.q!r} ({args.table})")
        print(f"value = {value!r} +/- {fo:.3e} (truncated at term {idx})")
    return 0


def _cmd_check_growth(args) -> int:
    params = {k: v for k, v in _params_of(args).items() if v is not None}
    if args.url:
        data = _post(args.url, "/growth", {"example": args.example, **_params_of(args)})
        profile = data
    else:
        coef = catalog.get_coefficient(args.example, **params)
        g = estimate_growth(coef)
        profile = {"example": args.example, "a_est": g.a_est, "p_est": g.p_est,
                   "c_est": g.c_est, "admissible": g.admissible,
                   "fit_residual": g.fit_residual}
    if args.json:
        print(_jdump(profile))
    else:
        print(f"{args.example}: a_est={profile['a_est']:.6f} "
              f"p_est={profile['p_est']:.6f} c_est={profile['c_est']:.6g} "
              f"admissible={profile['admissible']} "
              f"(fit residual {profile['fit_residual']:.3g})")
    return 0


def _cmd_selftest(args) -> int:
    if args.url:
        data = _post(args.url, "/selftest", {})
        criteria = data["criteria"]
        passed = data["passed"]
        total_ms = data["total_ms"]
    else:
        report = acceptance.run_acceptance()
        criteria = [{"name": r.name, "passed": r.passed, "detail": r.detail,
                     "ms": r.ms} for r in report.criteria]
        passed = report.passed
        total_ms = report.total_ms
    if args.json:
        print(_jdump({"passed": passed, "criteria": criteria, "total_ms": total_ms}))
    else:
        for r in criteria:
            flag = "PASS" if r["passed"] else "FAIL"
            print(f"{flag} {r['name']}: {r['detail']} ({r['ms']:.0f} ms)")
        n_ok = sum(1 for r in criteria if r["passed"])
        print(f"{'PASS' if passed else 'FAIL'} overall: {n_ok}/{len(criteria)} "
              f"criteria in {total_ms / 1e3:.1f}s")
    return 0 if passed else NUMERIC_ERROR


_COMMANDS = {
    "transform": _cmd_transform,
    "compare": _cmd_compare,
    "sweep": _cmd_compare,
    "asymptotic": _cmd_asymptotic,
    "check-growth": _cmd_check_growth,
    "selftest": _cmd_selftest,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc.message}", file=sys.stderr)
        return USAGE_ERROR
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (ContourError, ConvergenceError, OverflowError) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return NUMERIC_ERROR


if __name__ == "__main__":
    sys.exit(main())
