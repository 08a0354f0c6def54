"""HTTP API: the Analyze flow plus a health endpoint.

Readability and story points are computed locally while the remote
recommender call runs in a worker thread, so a slow LLM endpoint never
delays the local scores.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .errors import EmptyText, InvalidModel
from .estimator import StoryPointModel, load_model, predict
from .recommender import EndpointConfig, Recommendation, request_recommendation
from .textmetrics import ReadabilityReport, readability_report

DEFAULT_BODY_LIMIT = 64 * 1024


@dataclass(frozen=True)
class ServerConfig:
    model_path: str
    endpoint: EndpointConfig = EndpointConfig()
    body_limit_bytes: int = DEFAULT_BODY_LIMIT


@dataclass(frozen=True)
class AnalysisResult:
    readability: ReadabilityReport
    story_points: float
    recommendation: Recommendation
    timings_ms: dict[str, float]


def analyze_story(text: str, model: StoryPointModel, endpoint: EndpointConfig) -> AnalysisResult:
    """Run the three analyses for one story and compose the result."""
    if not text or not text.strip():
        raise EmptyText("story text must be non-empty")
    with ThreadPoolExecutor(max_workers=1) as pool:
        started = time.monotonic()
        future = pool.submit(request_recommendation, endpoint, text)
        t0 = time.monotonic()
        report = readability_report(text)
        t1 = time.monotonic()
        points = predict(model, text)
        t2 = time.monotonic()
        recommendation = future.result()
        done = time.monotonic()
    return AnalysisResult(
        readability=report,
        story_points=points,
        recommendation=recommendation,
        timings_ms={
            "readability": (t1 - t0) * 1000.0,
            "estimation": (t2 - t1) * 1000.0,
            "recommendation": (done - started) * 1000.0,
        },
    )


def result_to_dict(result: AnalysisResult) -> dict:
    report = result.readability
    return {
        "readability": {
            "gunning_fog": report.gunning_fog,
            "flesch_reading_ease": report.flesch_reading_ease,
            "coleman_liau": report.coleman_liau,
            "automated_readability": report.automated_readability,
            "final_result": report.final_result,
            "stats": asdict(report.stats),
        },
        "story_points": result.story_points,
        "recommendation": {
            "text": result.recommendation.text,
            "source": result.recommendation.source.value,
            "latency_ms": result.recommendation.latency_ms,
        },
        "timings_ms": result.timings_ms,
    }


def create_app(config: ServerConfig, model: StoryPointModel | None = None) -> FastAPI:
    """Build the API app; the model loads eagerly unless injected."""
    app = FastAPI(title="storytutor")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    app.state.model = model if model is not None else load_model(config.model_path)
    app.state.config = config

    @app.post("/analyze")
    async def analyze(request: Request):
        body = await request.body()
        if len(body) > config.body_limit_bytes:
            return JSONResponse({"error": "request body too large"}, status_code=413)
        try:
            payload = await request.json()
        except Exception:
            return JSONResponse({"error": "body must be JSON with a 'text' field"}, status_code=400)
        text = payload.get("text", "") if isinstance(payload, dict) else ""
        if not isinstance(text, str) or not text.strip():
            return JSONResponse({"error": "story text must be non-empty"}, status_code=400)
        loaded = app.state.model
        if loaded is None:
            return JSONResponse({"error": "model not loaded"}, status_code=500)
        try:
            result = analyze_story(text, loaded, config.endpoint)
        except InvalidModel:
            return JSONResponse({"error": "loaded model is invalid"}, status_code=500)
        except EmptyText:
            return JSONResponse({"error": "story text must be non-empty"}, status_code=400)
        return result_to_dict(result)

    @app.get("/health")
    async def health():
        loaded = app.state.model
        if loaded is None:
            return JSONResponse({"status": "loading"}, status_code=503)
        return {
            "status": "ok",
            "model_version": loaded.format_version,
            "vocabulary_size": len(loaded.vocabulary),
        }

    return app
