"""Pydantic request/response models for the HTTP service endpoints."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

ExampleLabel = Literal["a1", "a2", "a3", "a4", "a5", "a6", "a7"]
MethodName = Literal["contour", "oracle", "closed", "series"]
SeriesName = Literal["j0", "j1", "odd"]


class ParamsMixin(BaseModel):
    a: Optional[float] = Field(default=None, description="scale parameter a > 0")
    c: Optional[float] = Field(default=None, description="second scale parameter c > 0")
    n: Optional[int] = Field(default=None, ge=0, description="integer order n >= 0")


class TransformRequest(ParamsMixin):
    example: ExampleLabel
    q: float = Field(gt=0)
    method: MethodName = "contour"
    tol: float = Field(default=1e-8, gt=0)


class TransformResponse(BaseModel):
    example: str
    method: str
    q: float
    value: float
    error_estimate: float
    diagnostics: dict = {}


class CompareRequest(ParamsMixin):
    example: ExampleLabel
    q_grid: list[float]
    tol: float = Field(default=1e-8, gt=0)


class CompareRowModel(BaseModel):
    q: float
    method: str
    value: Optional[float] = None
    error: Optional[float] = None
    agree: Optional[bool] = None
    message: Optional[str] = None


class CompareResponse(BaseModel):
    example: str
    params: dict
    q_values: list[float]
    rows: list[CompareRowModel]
    timings_ms: dict


class GrowthRequest(ParamsMixin):
    example: ExampleLabel


class GrowthResponse(BaseModel):
    example: str
    a_est: float
    p_est: float
    c_est: float
    admissible: bool
    fit_residual: float


class AsymptoticRequest(BaseModel):
    series: SeriesName
    derivatives: list[float] = Field(min_length=1,
                                     description="f^(k)(0), index = derivative order")
    q: float = Field(gt=0)
    max_terms: int = Field(default=8, ge=1, le=64)


class AsymptoticResponse(BaseModel):
    series: str
    q: float
    value: float
    first_omitted: float
    truncation_index: int
    partial_sums: list[float]


class CriterionModel(BaseModel):
    name: str
    passed: bool
    detail: str
    ms: float


class SelftestResponse(BaseModel):
    passed: bool
    criteria: list[CriterionModel]
    total_ms: float


class ExampleInfo(BaseModel):
    label: str
    parameters: list[str]
    methods: list[str]


class HealthResponse(BaseModel):
    status: str
    version: str
