"""Method dispatch and comparison reports shared by the HTTP service and
the command-line client."""

from __future__ import annotations

import time
import warnings
from dataclasses import dataclass

from . import coefficient_catalog as catalog
from .errors import DomainError
from .mellin_barnes import ContourWarning, theorem1_transform, theorem2_transform
from .quadrature_oracle import hankel0_direct

__all__ = ["MethodValue", "CompareRow", "RunReport", "evaluate_method",
           "build_run_report", "methods_for", "CSV_HEADER", "report_to_csv"]

CSV_HEADER = "q,method,value,error,agree"

_ALL_METHODS = ("contour", "oracle", "closed", "series")


@dataclass(frozen=True)
class MethodValue:
    value: float
    error_estimate: float
    diagnostics: dict


@dataclass(frozen=True)
class CompareRow:
    q: float
    method: str
    value: float | None
    error: float | None
    agree: bool | None
    message: str | None = None


@dataclass(frozen=True)
class RunReport:
    example: str
    params: dict
    q_values: list
    rows: list
    timings_ms: dict


def methods_for(example: str) -> tuple:
    """Methods applicable to a catalog example; `series` is A.6-only and
    `closed` everything else."""
    if example == "a6":
        return ("contour", "oracle", "series")
    return ("contour", "oracle", "closed")


def evaluate_method(example: str, method: str, q: float, params: dict,
                    tol: float = 1e-8) -> MethodValue:
    """One (example, method, q) cell: value, error estimate, diagnostics."""
    if method not in _ALL_METHODS:
        raise DomainError(f"unknown method {method!r}; choose from {_ALL_METHODS}")
    if method not in methods_for(example):
        raise DomainError(f"method {method!r} is not applicable to example {example!r}")
    clean = {k: v for k, v in params.items() if v is not None}

    if method == "closed":
        value = catalog.closed_form(example, q, **clean)
        return MethodValue(value, 0.0, {"form": "closed"})

    if method == "series":
        res = catalog.a6_series_psi(q, **clean)
        return MethodValue(res.value, res.first_omitted,
                           {"terms": res.truncation_index + 1, "representation": "psi"})

    coef = catalog.get_coefficient(example, **clean)
    if method == "oracle":
        a = clean.get("a")
        gaussian = example in ("a1", "a2", "a6") and a
        cap = 6.5 / a if gaussian else None
        res = hankel0_direct(coef.generating, q, tol=tol,
                             x_cap=cap, tail_bound=1e-18 if cap else 0.0)
        return MethodValue(res.value, res.error_estimate, {"segments": res.segments})

    transform = theorem2_transform if coef.kind == "theorem2" else theorem1_transform
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", ContourWarning)
        res = transform(coef, q, tol=tol)
    notes = tuple(dict.fromkeys([str(c.message) for c in caught] + list(res.warnings)))
    return MethodValue(res.value, res.error_estimate,
                       {"nodes": res.nodes, "alpha": res.alpha,
                        "imag_residue": res.imag_residue, "warnings": list(notes)})


def build_run_report(example: str, q_values, params: dict, tol: float = 1e-8,
                     methods=None) -> RunReport:
    """All applicable methods on a q grid, with per-row agreement flags.

    A row agrees when it matches every other successful row at the same q
    within the sum of the two error estimates (plus a tiny relative
    floor).  Per-cell failures are reported in-row and never abort the
    sweep.
    """
    if methods is None:
        methods = methods_for(example)
    rows = []
    timings = {}
    for q in q_values:
        cells = {}
        for method in methods:
            t0 = time.perf_counter()
            try:
                cells[method] = evaluate_method(example, method, q, params, tol)
            except Exception as exc:
                cells[method] = exc
            timings[f"q={q!r}:{method}"] = (time.perf_counter() - t0) * 1e3
        good = {m: v for m, v in cells.items() if isinstance(v, MethodValue)}
        for method in methods:
            cell = cells[method]
            if not isinstance(cell, MethodValue):
                rows.append(CompareRow(q=q, method=method, value=None, error=None,
                                       agree=None, message=f"{type(cell).__name__}: {cell}"))
                continue
            agree = True
            for other_m, other in good.items():
                if other_m == method:
                    continue
                budget = (cell.error_estimate + other.error_estimate
                          + 1e-9 * max(abs(cell.value), abs(other.value)))
                if abs(cell.value - other.value) > budget:
                    agree = False
            rows.append(CompareRow(q=q, method=method, value=cell.value,
                                   error=cell.error_estimate, agree=agree))
    return RunReport(example=example, params={k: v for k, v in params.items() if v is not None},
                     q_values=list(q_values), rows=rows, timings_ms=timings)


def report_to_csv(report: RunReport) -> str:
    """Deterministic CSV: header then one row per (q, method)."""
    lines = [CSV_HEADER]
    for row in report.rows:
        value = repr(row.value) if row.value is not None else ""
        error = repr(row.error) if row.error is not None else ""
        agree = "" if row.agree is None else str(row.agree).lower()
        lines.append(f"{row.q!r},{row.method},{value},{error},{agree}")
    return "\n".join(lines) + "\n"
