"""Request/response models for the conductivity service."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field

from ..params import EvalSettings


class ComplexValue(BaseModel):
    re: float
    im: float

    @classmethod
    def from_complex(cls, v: complex) -> "ComplexValue":
        return cls(re=v.real, im=v.imag)

    def to_complex(self) -> complex:
        return complex(self.re, self.im)


class SettingsModel(BaseModel):
    tol_rel: float = 1e-10
    tol_abs: float = 1e-12
    truncation_radius: float | None = None
    backend: Literal["rational", "quadrature"] = "rational"
    grid_n_3d: int = Field(default=96, ge=16)

    def to_settings(self) -> EvalSettings:
        return EvalSettings(tol_rel=self.tol_rel, tol_abs=self.tol_abs,
                            truncation_radius=self.truncation_radius,
                            backend=self.backend, grid_n_3d=self.grid_n_3d)


class EvalRequest(BaseModel):
    x: float
    y: float
    q: float
    models: list[str] = ["classic", "full", "lindhard"]
    alpha: float | None = None
    settings: SettingsModel = SettingsModel()


class EvalResponse(BaseModel):
    x: float
    y: float
    q: float
    results: dict[str, ComplexValue]
    errors: dict[str, str] = {}


class SweepRequest(BaseModel):
    axis: Literal["q", "x"]
    start: float
    stop: float
    count: int = Field(ge=2)
    scale: Literal["linear", "log"] = "linear"
    x: float | None = None
    y: float | None = None
    q: float | None = None
    models: list[str] = ["classic", "full", "lindhard"]
    alpha: float | None = None
    settings: SettingsModel = SettingsModel()


class SweepRowModel(BaseModel):
    x: float
    y: float
    q: float
    model: str
    re: float | None
    im: float | None
    error: str | None = None


class SweepResponse(BaseModel):
    rows: list[SweepRowModel]


class VerifyRequest(BaseModel):
    tol: float | None = None
    grid_n: int | None = Field(default=None, ge=16)
    settings: SettingsModel = SettingsModel()


class CheckModel(BaseModel):
    name: str
    passed: bool
    measured: float
    requirement: str
    detail: str = ""


class VerifyResponse(BaseModel):
    passed: bool
    checks: list[CheckModel]
    report: str


class LimitsResponse(BaseModel):
    x: float
    y: float
    k0: ComplexValue
    q2_coefficient: ComplexValue
    q4_coefficient: ComplexValue
    note: str
