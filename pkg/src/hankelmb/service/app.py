"""FastAPI application wrapping the transform engine.

Run with:  uvicorn hankelmb.service:app
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__, acceptance
from .. import coefficient_catalog as catalog
from ..asymptotics import (
    DerivativeTable, hankel0_odd_series, willis_j0_series, willis_j1_series,
)
from ..errors import ContourError, ConvergenceError, DomainError
from ..mellin_barnes import estimate_growth
from ..reports import build_run_report, evaluate_method, methods_for
from .models import (
    AsymptoticRequest, AsymptoticResponse, CompareRequest, CompareResponse,
    CompareRowModel, CriterionModel, ExampleInfo, GrowthRequest, GrowthResponse,
    HealthResponse, SelftestResponse, TransformRequest, TransformResponse,
)

app = FastAPI(
    title="hankelmb",
    version=__version__,
    description="Zero-order Hankel transforms of even functions via "
                "Mellin-Barnes contour integrals, with closed-form and "
                "oscillatory-quadrature cross-checks.",
)

_SERIES_FNS = {"j0": willis_j0_series, "j1": willis_j1_series, "odd": hankel0_odd_series}


def _params(req) -> dict:
    return {"a": req.a, "c": req.c, "n": req.n}


def _as_http_error(exc: Exception) -> HTTPException:
    if isinstance(exc, DomainError):
        return HTTPException(status_code=422, detail=str(exc))
    if isinstance(exc, (ContourError, ConvergenceError, OverflowError)):
        return HTTPException(status_code=500, detail=f"numeric failure: {exc}")
    raise exc


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


@app.get("/examples", response_model=list[ExampleInfo])
def examples() -> list[ExampleInfo]:
    return [ExampleInfo(label=label, parameters=list(needed),
                        methods=list(methods_for(label)))
            for label, needed in sorted(catalog.EXAMPLES.items())]


@app.post("/transform", response_model=TransformResponse)
def transform(req: TransformRequest) -> TransformResponse:
    try:
        res = evaluate_method(req.example, req.method, req.q, _params(req), req.tol)
    except Exception as exc:
        raise _as_http_error(exc)
    return TransformResponse(example=req.example, method=req.method, q=req.q,
                             value=res.value, error_estimate=res.error_estimate,
                             diagnostics=res.diagnostics)


@app.post("/compare", response_model=CompareResponse)
def compare(req: CompareRequest) -> CompareResponse:
    try:
        report = build_run_report(req.example, req.q_grid, _params(req), req.tol)
    except DomainError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    rows = [CompareRowModel(q=r.q, method=r.method, value=r.value, error=r.error,
                            agree=r.agree, message=r.message) for r in report.rows]
    return CompareResponse(example=report.example, params=report.params,
                           q_values=report.q_values, rows=rows,
                           timings_ms=report.timings_ms)


@app.post("/growth", response_model=GrowthResponse)
def growth(req: GrowthRequest) -> GrowthResponse:
    try:
        coef = catalog.get_coefficient(req.example,
                                       **{k: v for k, v in _params(req).items()
                                          if v is not None})
        profile = estimate_growth(coef)
    except Exception as exc:
        raise _as_http_error(exc)
    return GrowthResponse(example=req.example, a_est=profile.a_est,
                          p_est=profile.p_est, c_est=profile.c_est,
                          admissible=profile.admissible,
                          fit_residual=profile.fit_residual)


@app.post("/asymptotic", response_model=AsymptoticResponse)
def asymptotic(req: AsymptoticRequest) -> AsymptoticResponse:
    table = DerivativeTable(values=list(req.derivatives), origin="request")
    try:
        res = _SERIES_FNS[req.series](table, req.q, req.max_terms)
    except Exception as exc:
        raise _as_http_error(exc)
    return AsymptoticResponse(series=req.series, q=req.q, value=res.value,
                              first_omitted=res.first_omitted,
                              truncation_index=res.truncation_index,
                              partial_sums=list(res.partial_sums))


@app.post("/selftest", response_model=SelftestResponse)
def selftest() -> SelftestResponse:
    report = acceptance.run_acceptance()
    return SelftestResponse(
        passed=report.passed,
        criteria=[CriterionModel(name=r.name, passed=r.passed,
                                 detail=r.detail, ms=r.ms)
                  for r in report.criteria],
        total_ms=report.total_ms)
