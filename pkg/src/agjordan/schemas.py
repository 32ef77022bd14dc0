"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, Field


class HealthResponse(BaseModel):
    status: str
    version: str


class HilbertRequest(BaseModel):
    generator: str
    variables: list[str] | None = None


class HilbertResponse(BaseModel):
    hilbert: list[int]


class PipelineRequest(BaseModel):
    generator: str
    ell: str
    variables: list[str] | None = None


class StringEntry(BaseModel):
    """One Jordan string: its length and the degree where it starts."""

    len: int
    deg: int


class PipelineResponse(BaseModel):
    hilbert: list[int]
    rank_matrix: list[list[int]]
    jdt_matrix: list[list[int]]
    jordan_type: list[int]
    jordan_degree_type: list[StringEntry]


class LefschetzResponse(BaseModel):
    hilbert: list[int]
    jordan_type: list[int]
    parts: int
    sperner: int
    conjugate: list[int]
    wlp_witness: bool
    slp_witness: bool


class MatrixCheckRequest(BaseModel):
    matrix: list[list[int]]


class ViolationModel(BaseModel):
    rule: str
    row: int
    col: int
    detail: str


class MatrixCheckResponse(BaseModel):
    passed: bool
    violations: list[ViolationModel]


class Codim2Request(BaseModel):
    jordan_type: list[int]
    socle: int


class Codim2Response(BaseModel):
    jordan_degree_type: list[StringEntry]


class RealizeRequest(BaseModel):
    matrix: list[list[int]]
    variables: list[str] | None = None
    nvars: int | None = Field(default=None, ge=1)
    seed: int = 0
    coefficient_pool: list[int] | None = None
    max_trials_per_layer: int | None = Field(default=None, ge=1)
    time_budget: float | None = Field(default=None, gt=0)


class RealizeResponse(BaseModel):
    outcome: str
    generator: str | None = None
    variables: list[str]
    trials: int
    deepest_layer: int
    check: MatrixCheckResponse | None = None


class PoolEntry(BaseModel):
    generator: str
    ell: str


class CollideRequest(BaseModel):
    pool: list[PoolEntry]
    variables: list[str] | None = None


class CollisionModel(BaseModel):
    first: int
    second: int
    hilbert: list[int]
    jordan_type: list[int]
    first_jdt: list[StringEntry]
    second_jdt: list[StringEntry]


class CollideResponse(BaseModel):
    collisions: list[CollisionModel]


class VerifyAssertion(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class VerifyResponse(BaseModel):
    passed: bool
    total: int
    failed: int
    results: list[VerifyAssertion]
