"""HTTP facade over the query engine and the map builder."""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .query import (
    NoSignalError,
    UnknownWordError,
    ZeroVectorError,
    analogy,
    compare_groups,
    cosine,
    most_similar,
)
from .tsne import ProjectionConfig
from .vectors import EmbeddingStore
from .vizmap import build_map

DEFAULT_MAX_SAMPLE = 1000
MAX_NEIGHBORS = 100


@dataclass
class ServiceConfig:
    vectors_path: str
    host: str = "127.0.0.1"
    port: int = 7000
    static_dir: str | None = None
    sample_size: int = 500
    k_clusters: int = 10
    max_sample: int = DEFAULT_MAX_SAMPLE
    seed: int = 1


@dataclass
class _MapCache:
    entries: dict[tuple[int, int, int], dict] = field(default_factory=dict)
    lock: threading.Lock = field(default_factory=threading.Lock)


class ApiError(Exception):
    def __init__(self, status: int, message: str, word: str | None = None):
        self.status = status
        self.message = message
        self.word = word


def _bad(message: str) -> ApiError:
    return ApiError(400, message)


def _int_param(raw: str | None, default: int, name: str) -> int:
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise _bad(f"parameter {name} must be an integer") from None


def create_app(store: EmbeddingStore, config: ServiceConfig | None = None) -> FastAPI:
    if config is None:
        config = ServiceConfig(vectors_path="")
    app = FastAPI(title="embedding explorer")
    app.add_middleware(
        CORSMiddleware,
        allow_origin_regex=r"https?://(localhost|127\.0\.0\.1)(:\d+)?",
        allow_methods=["*"],
        allow_headers=["*"],
    )
    cache = _MapCache()

    @app.exception_handler(ApiError)
    async def _api_error(_request: Request, exc: ApiError):
        body = {"error": exc.message}
        if exc.word is not None:
            body["word"] = exc.word
        return JSONResponse(status_code=exc.status, content=body)

    def resolve(word: str):
        try:
            return store.vector(word)
        except UnknownWordError as exc:
            raise ApiError(404, f"unknown word: {exc.word}", word=exc.word) from None

    @app.get("/api/info")
    def info():
        mode = store.model.config.mode if store.model is not None else "vectors_only"
        return {"vocab_size": len(store), "dim": store.dim, "mode": mode}

    @app.get("/api/similarity")
    def similarity(w1: str | None = None, w2: str | None = None):
        if not w1 or not w2:
            raise _bad("parameters w1 and w2 are required")
        v1, v2 = resolve(w1), resolve(w2)
        try:
            score = cosine(v1, v2)
        except ZeroVectorError as exc:
            raise _bad(str(exc)) from None
        return {"w1": w1, "w2": w2, "score": round(score, 6)}

    @app.get("/api/most_similar")
    def neighbors(w: str | None = None, k: str | None = None):
        if not w:
            raise _bad("parameter w is required")
        kk = _int_param(k, 10, "k")
        if not 1 <= kk <= MAX_NEIGHBORS:
            raise _bad(f"k must be between 1 and {MAX_NEIGHBORS}")
        try:
            results = most_similar(store, w, k=kk)
        except UnknownWordError as exc:
            raise ApiError(404, f"unknown word: {exc.word}", word=exc.word) from None
        except ZeroVectorError as exc:
            raise _bad(str(exc)) from None
        return {
            "w": w,
            "neighbors": [{"word": r.word, "score": r.score} for r in results],
        }

    @app.get("/api/analogy")
    def analogy_endpoint(
        a: str | None = None,
        b: str | None = None,
        c: str | None = None,
        k: str | None = None,
    ):
        if not a or not b or not c:
            raise _bad("parameters a, b and c are required")
        kk = _int_param(k, 10, "k")
        if not 1 <= kk <= MAX_NEIGHBORS:
            raise _bad(f"k must be between 1 and {MAX_NEIGHBORS}")
        try:
            results = analogy(store, a, b, c, k=kk)
        except UnknownWordError as exc:
            raise ApiError(404, f"unknown word: {exc.word}", word=exc.word) from None
        except ZeroVectorError as exc:
            raise _bad(str(exc)) from None
        return {
            "query": {"a": a, "b": b, "c": c},
            "results": [{"word": r.word, "score": r.score} for r in results],
        }

    @app.post("/api/compare")
    async def compare(request: Request):
        try:
            body = await request.json()
        except Exception:
            raise _bad("request body must be JSON") from None
        if not isinstance(body, dict):
            raise _bad("request body must be a JSON object")
        g1, g2 = body.get("group1"), body.get("group2")
        if (
            not isinstance(g1, list)
            or not isinstance(g2, list)
            or not g1
            or not g2
            or not all(isinstance(w, str) for w in g1 + g2)
        ):
            raise _bad("group1 and group2 must be nonempty lists of words")
        try:
            score = compare_groups(store, g1, g2)
        except UnknownWordError as exc:
            raise ApiError(404, f"unknown word: {exc.word}", word=exc.word) from None
        except ZeroVectorError as exc:
            raise _bad(str(exc)) from None
        return {"score": score}

    @app.get("/api/map")
    def map_endpoint(n: str | None = None, k: str | None = None):
        nn = _int_param(n, config.sample_size, "n")
        kk = _int_param(k, config.k_clusters, "k")
        if not 2 <= nn <= config.max_sample:
            raise _bad(f"n must be between 2 and {config.max_sample}")
        if not 1 <= kk <= nn:
            raise _bad("k must be between 1 and n")
        key = (nn, kk, config.seed)
        with cache.lock:
            cached = cache.entries.get(key)
            if cached is None:
                proj = ProjectionConfig(
                    sample_size=min(nn, len(store)),
                    perplexity=min(30.0, max(1.0, min(nn, len(store)) / 3.0 - 1.0)),
                    seed=config.seed,
                )
                result = build_map(store, min(kk, len(store)), proj)
                cached = {
                    "points": [
                        {"word": p.word, "x": p.x, "y": p.y, "cluster": p.cluster}
                        for p in result.points
                    ],
                    "kl": result.final_kl,
                }
                cache.entries[key] = cached
        return cached

    if config.static_dir:
        app.mount("/", StaticFiles(directory=config.static_dir, html=True), name="ui")

    return app


def serve(config: ServiceConfig) -> None:
    import uvicorn

    from .vectors import load_vectors

    store = load_vectors(config.vectors_path)
    app = create_app(store, config)
    uvicorn.run(app, host=config.host, port=config.port)
