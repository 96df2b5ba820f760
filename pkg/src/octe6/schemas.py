"""Pydantic request/response models for the service API."""

from __future__ import annotations

from typing import Any, Optional

from pydantic import BaseModel, Field


class MatrixPayload(BaseModel):
    """Hermitian 3x3 matrix: diagonal plus upper-triangle octonions.

    Octonion coefficients are ordered (1, i, j, k, kl, jl, il, l).  The
    lower-triangle keys are optional; when present they must be the
    conjugates of their mirrors.
    """

    diag: list[float] = Field(min_length=3, max_length=3)
    o12: list[float] = Field(min_length=8, max_length=8)
    o13: list[float] = Field(min_length=8, max_length=8)
    o23: list[float] = Field(min_length=8, max_length=8)
    o21: Optional[list[float]] = Field(default=None, min_length=8, max_length=8)
    o31: Optional[list[float]] = Field(default=None, min_length=8, max_length=8)
    o32: Optional[list[float]] = Field(default=None, min_length=8, max_length=8)

    def wire_obj(self) -> dict:
        obj = {"diag": self.diag, "o12": self.o12, "o13": self.o13, "o23": self.o23}
        for key in ("o21", "o31", "o32"):
            value = getattr(self, key)
            if value is not None:
                obj[key] = value
        return obj


class ApplyRequest(BaseModel):
    matrix: MatrixPayload
    family: str
    parameter: float


class ApplyResponse(BaseModel):
    matrix: MatrixPayload
    family: str
    parameter: float
    det_before: float
    det_after: float


class DecomposeRequest(BaseModel):
    matrix: MatrixPayload


class EigenPair(BaseModel):
    eigenvalue: float
    idempotent: MatrixPayload


class DecomposeResponse(BaseModel):
    eigenvalues: list[float]
    pairs: list[EigenPair]
    degenerate: bool
    residuals: dict[str, float]


class VerifyRequest(BaseModel):
    seed: int = 0
    trials: int = Field(default=10000, ge=1, le=10_000_000)
    tolerances: dict[str, float] = Field(default_factory=dict)
    suites: Optional[list[str]] = None


class VerifyResponse(BaseModel):
    config: dict[str, Any]
    suites: dict[str, Any]
    passed: bool


class SubsetRank(BaseModel):
    rank: int
    expected: int
    gap: Optional[float]  # None when nothing was rejected (infinite gap)
    conclusive: bool
    passed: bool


class DimsResponse(BaseModel):
    subsets: dict[str, SubsetRank]
    passed: bool


class TableResponse(BaseModel):
    units: list[str]
    rows: list[list[str]]


class StateModel(BaseModel):
    label: str
    generation: Optional[str]
    helicity: Optional[str]
    theta: list[list[float]]
    xi: list[float]
    momentum: dict[str, Any]
    n: float
    psi: list[list[float]]
    residual_norm: float
    det_p: float
    star_residual: float


class StatesResponse(BaseModel):
    states: list[StateModel]
    generations: list[str]
    count: int


class FamiliesResponse(BaseModel):
    ids: list[str]
    count: int


class HealthResponse(BaseModel):
    status: str
    version: str


class ErrorBody(BaseModel):
    error: str
    detail: str
