"""FastAPI application serving the similarity wire protocol.

POST /similarity with {"pairs": [["a", "b"], ...]} returns {"scores": [...]}
aligned with the request. GET /health reports 503 until the encoder has
loaded, then 200 with the model identity.
"""

from __future__ import annotations

from contextlib import asynccontextmanager

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel, field_validator

from .encoders import Encoder, encoder_from_env, pair_scores


class SimilarityRequest(BaseModel):
    pairs: list[tuple[str, str]]

    @field_validator("pairs")
    @classmethod
    def _non_empty(cls, pairs):
        if not pairs:
            raise ValueError("pairs must be a non-empty list")
        for a, b in pairs:
            if not a or not b:
                raise ValueError("pair texts must be non-empty")
        return pairs


class SimilarityResponse(BaseModel):
    scores: list[float]


def create_app(encoder: Encoder | None = None) -> FastAPI:
    """Build the service; ``encoder`` overrides the EMBED_MODEL selection."""

    @asynccontextmanager
    async def lifespan(app: FastAPI):
        app.state.encoder = encoder if encoder is not None else encoder_from_env()
        yield

    app = FastAPI(title="embed-service", lifespan=lifespan)
    app.state.encoder = None

    @app.exception_handler(RequestValidationError)
    async def malformed_body(_request: Request, exc: RequestValidationError):
        detail = [
            {"loc": [str(part) for part in err.get("loc", ())], "msg": str(err.get("msg", ""))}
            for err in exc.errors()
        ]
        return JSONResponse(status_code=400, content={"detail": detail})

    @app.get("/health")
    async def health():
        ready: Encoder | None = app.state.encoder
        if ready is None:
            return JSONResponse(status_code=503, content={"status": "loading"})
        return {"status": "ok", "model": ready.name}

    @app.post("/similarity", response_model=SimilarityResponse)
    async def similarity(request: SimilarityRequest):
        ready: Encoder | None = app.state.encoder
        if ready is None:
            return JSONResponse(status_code=503, content={"detail": "model loading"})
        try:
            scores = pair_scores(ready, request.pairs)
        except Exception as exc:  # inference failure surfaces as 500 + message
            return JSONResponse(status_code=500, content={"detail": str(exc)})
        return {"scores": scores}

    return app
