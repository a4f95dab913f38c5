"""HTTP scoring service.

Request bodies are parsed by hand so malformed input maps to the
documented error codes instead of framework-default validation errors.
Responses are rendered through the same canonical JSON writer as the CLI,
keeping the two surfaces byte-identical. The service holds no per-request
state beyond the loaded model and lexicons.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Mapping, Sequence

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware

from .annotate import annotate
from .api import MAX_TEXT_CHARS, canonical_json, error_body, extract_response, score_response
from .features import PostMeta, compute_facets, extract_features
from .lexicon import LexiconSet, load_lexicons
from .model import QualityModel, load_guidelines, load_model, score


def _json_response(payload: dict, status_code: int = 200) -> Response:
    return Response(
        content=canonical_json(payload),
        status_code=status_code,
        media_type="application/json",
    )


def _invalid(message: str) -> Response:
    return _json_response(error_body("invalid_request", message), status_code=400)


def _parse_draft(body: bytes) -> tuple[str, PostMeta] | Response:
    try:
        payload = json.loads(body)
    except json.JSONDecodeError:
        return _invalid("request body is not valid JSON")
    if not isinstance(payload, dict):
        return _invalid("request body must be a JSON object")
    text = payload.get("text")
    if not isinstance(text, str):
        return _invalid("field 'text' must be a string")
    for flag in ("has_image", "has_video"):
        if flag in payload and not isinstance(payload[flag], bool):
            return _invalid(f"field {flag!r} must be a boolean")
    if len(text) > MAX_TEXT_CHARS:
        return _json_response(
            error_body(
                "text_too_large",
                f"text exceeds {MAX_TEXT_CHARS} characters",
                {"max_chars": MAX_TEXT_CHARS, "actual": len(text)},
            ),
            status_code=413,
        )
    meta = PostMeta(
        has_image=payload.get("has_image", False),
        has_video=payload.get("has_video", False),
    )
    return text, meta


def create_app(
    model: QualityModel,
    lex: LexiconSet,
    guidelines: Mapping[str, str] | None = None,
    cors_origins: Sequence[str] = ("*",),
) -> FastAPI:
    guidelines = guidelines or load_guidelines()
    app = FastAPI(docs_url=None, redoc_url=None, openapi_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(cors_origins),
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.get("/healthz")
    async def healthz() -> Response:
        return Response(content="ok", media_type="text/plain")

    @app.get("/v1/model")
    async def model_info() -> Response:
        return _json_response(
            {
                "model_version": model.version,
                "created_at": model.created_at,
                "seed": model.seed,
                "feature_count": len(model.features),
                "score_min": model.score_min,
                "score_max": model.score_max,
                "facets": list(model.facet_tables.keys()),
            }
        )

    @app.post("/v1/score")
    async def score_draft(request: Request) -> Response:
        parsed = _parse_draft(await request.body())
        if isinstance(parsed, Response):
            return parsed
        text, meta = parsed
        fv = extract_features(annotate(text, lex), meta)
        assessment = score(model, fv, guidelines=guidelines)
        return _json_response(score_response(assessment))

    @app.post("/v1/extract")
    async def extract_draft(request: Request) -> Response:
        parsed = _parse_draft(await request.body())
        if isinstance(parsed, Response):
            return parsed
        text, meta = parsed
        fv = extract_features(annotate(text, lex), meta)
        return _json_response(extract_response(fv, compute_facets(fv)))

    return app


def serve(
    model_path: str | Path,
    lexicon_dir: str | Path | None = None,
    host: str = "127.0.0.1",
    port: int = 8765,
    cors_origins: Sequence[str] = ("*",),
) -> None:
    """Load resources, then block serving HTTP. Load errors surface before
    the socket is bound."""
    import uvicorn

    model = load_model(model_path)
    lex = load_lexicons(lexicon_dir)
    app = create_app(model, lex, cors_origins=cors_origins)
    uvicorn.run(app, host=host, port=port, log_level="info")
