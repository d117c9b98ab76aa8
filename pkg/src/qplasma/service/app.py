"""FastAPI application and the endpoint handlers behind it."""

from __future__ import annotations

from dataclasses import replace

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..conductivity import sigma_k0, smallq_coefficients
from ..params import DimensionlessPoint, InvalidParams
from ..sweep import SweepSpec, evaluate_model, run_sweep
from ..verify import run_verify
from .schemas import (
    CheckModel,
    ComplexValue,
    EvalRequest,
    EvalResponse,
    LimitsResponse,
    SweepRequest,
    SweepResponse,
    SweepRowModel,
    VerifyRequest,
    VerifyResponse,
)


def handle_eval(req: EvalRequest) -> EvalResponse:
    pt = DimensionlessPoint(x=req.x, y=req.y, q=req.q)
    settings = req.settings.to_settings()
    results: dict[str, ComplexValue] = {}
    errors: dict[str, str] = {}
    for model in req.models:
        try:
            results[model] = ComplexValue.from_complex(
                evaluate_model(model, pt, settings, req.alpha))
        except InvalidParams:
            raise
        except Exception as exc:
            errors[model] = f"{type(exc).__name__}: {exc}"
    return EvalResponse(x=pt.x, y=pt.y, q=pt.q, results=results, errors=errors)


def handle_sweep(req: SweepRequest) -> SweepResponse:
    fixed = {name: getattr(req, name)
             for name in ("x", "y", "q")
             if name != req.axis and getattr(req, name) is not None}
    spec = SweepSpec(axis=req.axis, start=req.start, stop=req.stop,
                     count=req.count, fixed=fixed, scale=req.scale,
                     models=tuple(req.models), alpha=req.alpha)
    rows = run_sweep(spec, req.settings.to_settings())
    out: list[SweepRowModel] = []
    for row in rows:
        for model in spec.models:
            if model in row.values:
                v = row.values[model]
                out.append(SweepRowModel(x=row.x, y=row.y, q=row.q,
                                         model=model, re=v.real, im=v.imag))
            else:
                out.append(SweepRowModel(x=row.x, y=row.y, q=row.q,
                                         model=model, re=None, im=None,
                                         error=row.errors.get(model)))
    return SweepResponse(rows=out)


def handle_verify(req: VerifyRequest) -> VerifyResponse:
    settings = req.settings.to_settings()
    if req.grid_n is not None:
        settings = replace(settings, grid_n_3d=req.grid_n)
    report = run_verify(settings, agreement_tol=req.tol)
    return VerifyResponse(
        passed=report.passed,
        checks=[CheckModel(name=c.name, passed=c.passed, measured=c.measured,
                           requirement=c.requirement, detail=c.detail)
                for c in report.checks],
        report=report.render(),
    )


def handle_limits(x: float, y: float) -> LimitsResponse:
    if y <= 0:
        raise InvalidParams("y must be positive")
    coeffs = smallq_coefficients(x, y)
    return LimitsResponse(
        x=x, y=y,
        k0=ComplexValue.from_complex(sigma_k0(x, y)),
        q2_coefficient=ComplexValue.from_complex(coeffs["c2"]),
        q4_coefficient=ComplexValue.from_complex(coeffs["c4"]),
        note=("full/sigma0 = k0 + c2 q^2 + c4 q^4 + O(q^6); the quantum "
              "correction enters only at O(q^6)"),
    )


def create_app() -> FastAPI:
    app = FastAPI(title="qplasma", version=__version__,
                  description="Transverse conductivity of a quantum "
                              "collisional Maxwellian plasma")

    @app.exception_handler(InvalidParams)
    async def _invalid_params(request, exc: InvalidParams):
        from fastapi.responses import JSONResponse
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/eval", response_model=EvalResponse)
    def eval_point(req: EvalRequest) -> EvalResponse:
        return handle_eval(req)

    @app.post("/sweep", response_model=SweepResponse)
    def sweep(req: SweepRequest) -> SweepResponse:
        return handle_sweep(req)

    @app.post("/verify", response_model=VerifyResponse)
    def verify(req: VerifyRequest) -> VerifyResponse:
        return handle_verify(req)

    @app.get("/limits", response_model=LimitsResponse)
    def limits(x: float, y: float) -> LimitsResponse:
        return handle_limits(x, y)

    return app
