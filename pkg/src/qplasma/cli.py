"""Command-line front end.

The CLI is a thin client of the service API: every command builds the same
request models the HTTP endpoints accept and either calls the handlers
in-process (default) or posts them to a running server (--server URL).
All numeric output carries 17 significant digits, so repeated runs with
identical inputs are byte-identical.

Commands:
    eval    one-point evaluation of selected models
    sweep   parameter sweep along q or x, CSV or JSON
    verify  run the full verification suite (exit status reflects the result)
    limits  k = 0 closed form and small-q expansion coefficients
    serve   run the HTTP service
"""

from __future__ import annotations

import argparse
import sys

from .params import InvalidParams
from .service.app import (
    create_app,
    handle_eval,
    handle_limits,
    handle_sweep,
    handle_verify,
)
from .service.schemas import (
    EvalRequest,
    EvalResponse,
    LimitsResponse,
    SettingsModel,
    SweepRequest,
    SweepResponse,
    VerifyRequest,
    VerifyResponse,
)
from .sweep import CSV_HEADER, MODELS, THREADS_ENV


def _fmt(v: float) -> str:
    return format(v, ".17g")


class Client:
    """Dispatches requests either in-process or to a remote server."""

    def __init__(self, server: str | None = None):
        self.server = server.rstrip("/") if server else None

    def _post(self, path: str, payload: dict, model):
        import httpx

        resp = httpx.post(f"{self.server}{path}", json=payload, timeout=600.0)
        if resp.status_code != 200:
            raise SystemExit(f"server error {resp.status_code}: {resp.text}")
        return model.model_validate(resp.json())

    def eval(self, req: EvalRequest) -> EvalResponse:
        if self.server:
            return self._post("/eval", req.model_dump(), EvalResponse)
        return handle_eval(req)

    def sweep(self, req: SweepRequest) -> SweepResponse:
        if self.server:
            return self._post("/sweep", req.model_dump(), SweepResponse)
        return handle_sweep(req)

    def verify(self, req: VerifyRequest) -> VerifyResponse:
        if self.server:
            return self._post("/verify", req.model_dump(), VerifyResponse)
        return handle_verify(req)

    def limits(self, x: float, y: float) -> LimitsResponse:
        if self.server:
            import httpx

            resp = httpx.get(f"{self.server}/limits", params={"x": x, "y": y},
                             timeout=60.0)
            if resp.status_code != 200:
                raise SystemExit(f"server error {resp.status_code}: {resp.text}")
            return LimitsResponse.model_validate(resp.json())
        return handle_limits(x, y)


def _settings_model(args) -> SettingsModel:
    kwargs = {}
    if getattr(args, "backend", None):
        kwargs["backend"] = args.backend
    if getattr(args, "grid", None):
        kwargs["grid_n_3d"] = args.grid
    return SettingsModel(**kwargs)


def _render_eval(resp: EvalResponse) -> str:
    parts = [f'"x": {_fmt(resp.x)}, "y": {_fmt(resp.y)}, "q": {_fmt(resp.q)}']
    entries = ", ".join(
        f'"{name}": {{"re": {_fmt(v.re)}, "im": {_fmt(v.im)}}}'
        for name, v in resp.results.items())
    parts.append(f'"results": {{{entries}}}')
    if resp.errors:
        errs = ", ".join(f'"{k}": "{v}"' for k, v in resp.errors.items())
        parts.append(f'"errors": {{{errs}}}')
    return "{" + ", ".join(parts) + "}"


def _render_sweep_csv(resp: SweepResponse) -> str:
    lines = [CSV_HEADER]
    for r in resp.rows:
        re = _fmt(r.re) if r.re is not None else "nan"
        im = _fmt(r.im) if r.im is not None else "nan"
        lines.append(f"{_fmt(r.x)},{_fmt(r.y)},{_fmt(r.q)},{r.model},{re},{im}")
    return "\n".join(lines) + "\n"


def _render_sweep_json(resp: SweepResponse) -> str:
    items = []
    for r in resp.rows:
        head = (f'"x": {_fmt(r.x)}, "y": {_fmt(r.y)}, "q": {_fmt(r.q)}, '
                f'"model": "{r.model}"')
        if r.re is not None and r.im is not None:
            items.append(f'{{{head}, "re": {_fmt(r.re)}, "im": {_fmt(r.im)}}}')
        else:
            msg = (r.error or "evaluation failed").replace('"', "'")
            items.append(f'{{{head}, "re": null, "im": null, "error": "{msg}"}}')
    return "[\n  " + ",\n  ".join(items) + "\n]\n"


def _render_limits(resp: LimitsResponse) -> str:
    def cv(v):
        return f'{{"re": {_fmt(v.re)}, "im": {_fmt(v.im)}}}'

    return ("{" + f'"x": {_fmt(resp.x)}, "y": {_fmt(resp.y)}, '
            f'"k0": {cv(resp.k0)}, '
            f'"q2_coefficient": {cv(resp.q2_coefficient)}, '
            f'"q4_coefficient": {cv(resp.q4_coefficient)}, '
            f'"note": "{resp.note}"' + "}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qplasma",
        description="Transverse conductivity of a quantum collisional "
                    "Maxwellian plasma (values are sigma/sigma0).",
        epilog=f"Set {THREADS_ENV} to cap sweep parallelism.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_server(p):
        p.add_argument("--server", default=None,
                       help="base URL of a running service; default in-process")

    p_eval = sub.add_parser("eval", help="evaluate models at one point")
    p_eval.add_argument("--x", type=float, required=True)
    p_eval.add_argument("--y", type=float, required=True)
    p_eval.add_argument("--q", type=float, required=True)
    p_eval.add_argument("--alpha", type=float, default=None,
                        help="degeneracy parameter for model 'degenerate'")
    p_eval.add_argument("--model", action="append", choices=MODELS,
                        help="repeatable; default classic, full, lindhard")
    p_eval.add_argument("--backend", choices=("rational", "quadrature"))
    p_eval.add_argument("--grid", type=int, help="3-D grid points per axis")
    add_server(p_eval)

    p_sweep = sub.add_parser("sweep", help="sweep q or x, emit CSV/JSON")
    p_sweep.add_argument("--axis", choices=("q", "x"), required=True)
    p_sweep.add_argument("--min", type=float, required=True, dest="vmin")
    p_sweep.add_argument("--max", type=float, required=True, dest="vmax")
    p_sweep.add_argument("--n", type=int, required=True)
    p_sweep.add_argument("--log", action="store_true", help="log-spaced grid")
    p_sweep.add_argument("--x", type=float, default=None)
    p_sweep.add_argument("--y", type=float, default=None)
    p_sweep.add_argument("--q", type=float, default=None)
    p_sweep.add_argument("--models", nargs="+", choices=MODELS,
                         default=["classic", "full", "lindhard"])
    p_sweep.add_argument("--alpha", type=float, default=None)
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    p_sweep.add_argument("--out", default=None, help="output file; default stdout")
    p_sweep.add_argument("--backend", choices=("rational", "quadrature"))
    p_sweep.add_argument("--grid", type=int)
    add_server(p_sweep)

    p_verify = sub.add_parser("verify", help="run the verification suite")
    p_verify.add_argument("--tol", type=float, default=None,
                          help="override the agreement-check tolerance")
    p_verify.add_argument("--grid", type=int, default=None,
                          help="3-D grid points per axis")
    add_server(p_verify)

    p_limits = sub.add_parser("limits", help="k=0 form and small-q coefficients")
    p_limits.add_argument("--x", type=float, required=True)
    p_limits.add_argument("--y", type=float, required=True)
    add_server(p_limits)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except InvalidParams as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args) -> int:
    if args.command == "serve":
        import uvicorn

        uvicorn.run(create_app(), host=args.host, port=args.port)
        return 0

    client = Client(args.server)

    if args.command == "eval":
        req = EvalRequest(x=args.x, y=args.y, q=args.q,
                          models=args.model or ["classic", "full", "lindhard"],
                          alpha=args.alpha, settings=_settings_model(args))
        print(_render_eval(client.eval(req)))
        return 0

    if args.command == "sweep":
        fixed = {k: getattr(args, k) for k in ("x", "y", "q")
                 if k != args.axis and getattr(args, k) is not None}
        missing = {"x", "y", "q"} - {args.axis} - set(fixed)
        if missing:
            raise InvalidParams(f"sweep over {args.axis} needs fixed "
                                f"--{' --'.join(sorted(missing))}")
        req = SweepRequest(axis=args.axis, start=args.vmin, stop=args.vmax,
                           count=args.n, scale="log" if args.log else "linear",
                           models=list(args.models), alpha=args.alpha,
                           settings=_settings_model(args), **fixed)
        resp = client.sweep(req)
        text = (_render_sweep_csv(resp) if args.format == "csv"
                else _render_sweep_json(resp))
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return 0

    if args.command == "verify":
        req = VerifyRequest(tol=args.tol, grid_n=args.grid)
        resp = client.verify(req)
        sys.stdout.write(resp.report)
        return 0 if resp.passed else 1

    if args.command == "limits":
        print(_render_limits(client.limits(args.x, args.y)))
        return 0

    raise AssertionError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    raise SystemExit(main())
