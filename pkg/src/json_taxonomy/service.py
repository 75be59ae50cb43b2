"""HTTP service exposing the analyzer and serving the web UI assets.

The analyze endpoint takes the raw document text as the request body
(deliberately not framework-parsed JSON) so syntactically invalid
documents reach the analyzer and come back as structured 422 errors.
Analysis is pure per request; the only state is configuration read at
startup.
"""

from __future__ import annotations

import argparse
import os
from dataclasses import dataclass
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .model import DocumentSyntaxError
from .parsing import parse_bytes
from .report import SCHEMA_VERSION, build_report, serialize_report

DEFAULT_PORT = 8080
DEFAULT_BODY_LIMIT = 10 * 1024 * 1024  # 10 MiB


@dataclass(frozen=True, slots=True)
class ServiceConfig:
    port: int = DEFAULT_PORT
    asset_dir: Path | None = None
    body_limit: int = DEFAULT_BODY_LIMIT


def create_app(config: ServiceConfig = ServiceConfig()) -> FastAPI:
    app = FastAPI(title="json-taxonomy", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["GET", "POST"],
        allow_headers=["*"],
    )

    @app.post("/api/analyze")
    async def analyze(request: Request) -> Response:
        declared = request.headers.get("content-length")
        if declared is not None and declared.isdigit() and int(declared) > config.body_limit:
            return _too_large(config.body_limit)
        body = await request.body()
        if len(body) > config.body_limit:
            return _too_large(config.body_limit)
        try:
            root = parse_bytes(body)
        except DocumentSyntaxError as exc:
            failure = exc.failure
            return JSONResponse(
                status_code=422,
                content={
                    "error": {
                        "message": failure.message,
                        "line": failure.line,
                        "column": failure.column,
                    }
                },
            )
        payload = serialize_report(build_report(root))
        return Response(content=payload, media_type="application/json")

    @app.get("/api/health")
    async def health() -> JSONResponse:
        return JSONResponse({"status": "ok", "schemaVersion": SCHEMA_VERSION})

    if config.asset_dir is not None:
        app.mount("/", StaticFiles(directory=config.asset_dir, html=True), name="ui")

    return app


def _too_large(limit: int) -> JSONResponse:
    return JSONResponse(
        status_code=413,
        content={"error": {"message": f"request body exceeds {limit} bytes"}},
    )


def config_from_args(argv: list[str] | None = None) -> ServiceConfig:
    env = os.environ
    parser = argparse.ArgumentParser(
        prog="json-taxonomy-serve",
        description="Serve the JSON document analyzer over HTTP.",
    )
    parser.add_argument(
        "--port",
        type=int,
        default=int(env.get("JSON_TAXONOMY_PORT", DEFAULT_PORT)),
        help="listen port (env JSON_TAXONOMY_PORT)",
    )
    parser.add_argument(
        "--assets",
        type=Path,
        default=env.get("JSON_TAXONOMY_ASSETS"),
        help="directory of static UI assets served at / (env JSON_TAXONOMY_ASSETS)",
    )
    parser.add_argument(
        "--body-limit",
        type=int,
        default=int(env.get("JSON_TAXONOMY_BODY_LIMIT", DEFAULT_BODY_LIMIT)),
        help="maximum request body size in bytes (env JSON_TAXONOMY_BODY_LIMIT)",
    )
    args = parser.parse_args(argv)
    return ServiceConfig(port=args.port, asset_dir=args.assets, body_limit=args.body_limit)


def main(argv: list[str] | None = None) -> int:
    import uvicorn

    config = config_from_args(argv)
    uvicorn.run(create_app(config), host="0.0.0.0", port=config.port)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
