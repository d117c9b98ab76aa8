"""Parameter sweeps over the dimensionless coordinates, with CSV/JSON output.

Sweeps run along one axis (q or x) at fixed values of the other two
coordinates, evaluating any subset of the conductivity models per point.
Per-point failures are recorded in the row and never abort the sweep.
Output is deterministic: points are evaluated concurrently but assembled in
axis order, and every number is rendered with 17 significant digits, so
identical inputs produce byte-identical files.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import conductivity as _cond
from .degeneracy import DegeneracyParams, sigma_degenerate
from .params import (
    DEFAULT_SETTINGS,
    DimensionlessPoint,
    EvalSettings,
    InvalidParams,
)

__all__ = [
    "MODELS",
    "SweepRow",
    "SweepSpec",
    "evaluate_model",
    "render_csv",
    "render_json",
    "run_sweep",
]

MODELS = ("classic", "full", "lindhard", "smallq", "degenerate")

CSV_HEADER = "x,y,q,model,re,im"

THREADS_ENV = "QPLASMA_THREADS"


def _fmt(v: float) -> str:
    return format(v, ".17g")


def evaluate_model(model: str, pt: DimensionlessPoint,
                   settings: EvalSettings = DEFAULT_SETTINGS,
                   alpha: float | None = None) -> complex:
    """Evaluate one named conductivity model at one point."""
    if model == "classic":
        return _cond.sigma_classical(pt, settings)
    if model == "full":
        return _cond.sigma_full(pt, settings).full
    if model == "lindhard":
        return _cond.sigma_lindhard(pt, settings)
    if model == "smallq":
        return _cond.sigma_smallq(pt, settings)
    if model == "degenerate":
        if alpha is None:
            raise InvalidParams("model 'degenerate' requires alpha")
        return sigma_degenerate(pt, DegeneracyParams(alpha), settings)
    raise InvalidParams(f"unknown model {model!r}; choose from {MODELS}")


@dataclass(frozen=True)
class SweepSpec:
    """One sweep: axis, range, fixed coordinates and the models to evaluate."""

    axis: str  # "q" | "x"
    start: float
    stop: float
    count: int
    fixed: dict[str, float] = field(default_factory=dict)
    scale: str = "linear"  # "linear" | "log"
    models: tuple[str, ...] = ("classic", "full", "lindhard")
    alpha: float | None = None

    def __post_init__(self) -> None:
        if self.axis not in ("q", "x"):
            raise InvalidParams("axis must be 'q' or 'x'")
        if not self.start < self.stop:
            raise InvalidParams("start must be < stop")
        if self.count < 2:
            raise InvalidParams("count must be >= 2")
        if self.scale not in ("linear", "log"):
            raise InvalidParams("scale must be 'linear' or 'log'")
        if self.scale == "log" and self.start <= 0:
            raise InvalidParams("log scale requires start > 0")
        if not self.models:
            raise InvalidParams("models must be non-empty")
        for m in self.models:
            if m not in MODELS:
                raise InvalidParams(f"unknown model {m!r}; choose from {MODELS}")
        if "degenerate" in self.models and self.alpha is None:
            raise InvalidParams("model 'degenerate' requires alpha")
        needed = {"x", "y", "q"} - {self.axis}
        if set(self.fixed) != needed:
            raise InvalidParams(f"fixed must provide exactly {sorted(needed)}")
        # every grid point must be a valid DimensionlessPoint
        self.point(self.start)
        self.point(self.stop)

    def point(self, value: float) -> DimensionlessPoint:
        coords = dict(self.fixed)
        coords[self.axis] = value
        return DimensionlessPoint(**coords)

    def grid(self) -> np.ndarray:
        if self.scale == "log":
            return np.geomspace(self.start, self.stop, self.count)
        return np.linspace(self.start, self.stop, self.count)


@dataclass
class SweepRow:
    x: float
    y: float
    q: float
    values: dict[str, complex]
    errors: dict[str, str]


def _thread_cap() -> int:
    raw = os.environ.get(THREADS_ENV, "")
    if raw.strip():
        try:
            return max(1, int(raw))
        except ValueError:
            raise InvalidParams(f"{THREADS_ENV} must be an integer, got {raw!r}")
    return min(8, os.cpu_count() or 1)


def _eval_point(spec: SweepSpec, value: float,
                settings: EvalSettings) -> SweepRow:
    pt = spec.point(value)
    values: dict[str, complex] = {}
    errors: dict[str, str] = {}
    for model in spec.models:
        try:
            values[model] = evaluate_model(model, pt, settings, spec.alpha)
        except Exception as exc:  # recorded in-row, sweep continues
            errors[model] = f"{type(exc).__name__}: {exc}"
    return SweepRow(x=pt.x, y=pt.y, q=pt.q, values=values, errors=errors)


def run_sweep(spec: SweepSpec,
              settings: EvalSettings = DEFAULT_SETTINGS) -> list[SweepRow]:
    """Evaluate the sweep; rows come back in axis order regardless of the
    completion order of the worker threads."""
    grid = spec.grid()
    workers = _thread_cap()
    if workers == 1 or len(grid) == 1:
        return [_eval_point(spec, v, settings) for v in grid]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_eval_point, spec, v, settings) for v in grid]
        return [f.result() for f in futures]


def render_csv(rows: list[SweepRow], models: tuple[str, ...]) -> str:
    """Long-format CSV, one line per (point, model); failed evaluations
    carry nan,nan as the error marker."""
    lines = [CSV_HEADER]
    for row in rows:
        for model in models:
            if model in row.values:
                v = row.values[model]
                re, im = _fmt(v.real), _fmt(v.imag)
            else:
                re = im = "nan"
            lines.append(f"{_fmt(row.x)},{_fmt(row.y)},{_fmt(row.q)},{model},{re},{im}")
    return "\n".join(lines) + "\n"


def render_json(rows: list[SweepRow], models: tuple[str, ...]) -> str:
    """JSON array mirroring the CSV schema; numbers are rendered by hand so
    the 17-significant-digit contract holds here too."""
    items = []
    for row in rows:
        for model in models:
            head = (f'"x": {_fmt(row.x)}, "y": {_fmt(row.y)}, '
                    f'"q": {_fmt(row.q)}, "model": "{model}"')
            if model in row.values:
                v = row.values[model]
                items.append(f'{{{head}, "re": {_fmt(v.real)}, "im": {_fmt(v.imag)}}}')
            else:
                msg = row.errors.get(model, "evaluation failed").replace('"', "'")
                items.append(f'{{{head}, "re": null, "im": null, "error": "{msg}"}}')
    return "[\n  " + ",\n  ".join(items) + "\n]\n"
