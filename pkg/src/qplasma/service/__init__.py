"""HTTP service wrapping the conductivity library.

`create_app` builds the FastAPI application; the `handle_*` functions in
`qplasma.service.app` implement each endpoint on plain request/response
models so in-process callers (the CLI) share the exact code path the HTTP
routes use.
"""

from .app import create_app

__all__ = ["create_app"]
