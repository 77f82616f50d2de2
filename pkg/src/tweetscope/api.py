"""Read-only HTTP API over a data directory's published artifacts.

Every endpoint is a pure projection of the loaded snapshot and exports:
identical requests against the same artifacts produce identical payloads.
Artifacts are loaded into an immutable bundle; reload swaps the bundle
atomically between requests.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import artifacts
from .aggregate import AggregateSnapshot, load_snapshot, query
from .errors import InvalidRange
from .periods import GRANULARITIES

_COUNTRY_RE = re.compile(r"^[A-Z]{2}$")

DEFAULT_PORT = 8000
DEFAULT_HOST = "127.0.0.1"

ENV_PREFIX = "TWEETSCOPE_"


class ApiError(Exception):
    """Maps to a JSON error body {status, code, message}."""

    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


def _bad_parameter(message: str) -> ApiError:
    return ApiError(400, "bad_parameter", message)


@dataclass
class ServerConfig:
    port: int = DEFAULT_PORT
    host: str = DEFAULT_HOST
    data_dir: str = "."
    cors_origin: str | None = None


def load_server_config(
    path: str | Path | None = None,
    env: dict | None = None,
    **overrides,
) -> ServerConfig:
    """key=value config file, TWEETSCOPE_* environment, explicit overrides --
    in increasing precedence."""
    values: dict = {}
    if path is not None:
        with open(path, encoding="utf-8") as f:
            for line_no, line in enumerate(f, start=1):
                s = line.strip()
                if not s or s.startswith("#"):
                    continue
                if "=" not in s:
                    raise ValueError(f"{path}:{line_no}: expected key=value")
                key, _, value = s.partition("=")
                values[key.strip()] = value.strip().strip("'\"")
    env = os.environ if env is None else env
    for key in ("port", "host", "data_dir", "cors_origin"):
        env_key = ENV_PREFIX + key.upper()
        if env_key in env:
            values[key] = env[env_key]
    for key, value in overrides.items():
        if value is not None:
            values[key] = value
    known = {"port", "host", "data_dir", "cors_origin"}
    unknown = set(values) - known
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    cfg = ServerConfig()
    if "port" in values:
        cfg.port = int(values["port"])
    if "host" in values:
        cfg.host = str(values["host"])
    if "data_dir" in values:
        cfg.data_dir = str(values["data_dir"])
    if "cors_origin" in values:
        cfg.cors_origin = str(values["cors_origin"]) or None
    return cfg


@dataclass
class ArtifactBundle:
    snapshot: AggregateSnapshot
    topics: dict
    controversy: dict


class ArtifactStore:
    """Holds the currently served bundle; reload() swaps it atomically."""

    def __init__(self, data_dir: str | Path):
        self.data_dir = Path(data_dir)
        self.bundle: ArtifactBundle | None = None
        self.last_error: str | None = None

    def reload(self) -> bool:
        """Load all artifacts; on failure the previous bundle stays served."""
        try:
            bundle = ArtifactBundle(
                snapshot=load_snapshot(self.data_dir / artifacts.SNAPSHOT_FILE),
                topics=artifacts.read_topics_export(self.data_dir),
                controversy=artifacts.read_controversy_export(self.data_dir),
            )
        except Exception as exc:  # noqa: BLE001 -- keep serving the old bundle
            self.last_error = str(exc)
            return False
        self.bundle = bundle
        return True

    def require(self) -> ArtifactBundle:
        if self.bundle is None:
            raise ApiError(503, "not_ready",
                           f"artifacts not loaded from {self.data_dir}")
        return self.bundle


def _parse_int(raw: str | None, name: str, default: int, low: int = 1) -> int:
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise _bad_parameter(f"{name} must be an integer, got {raw!r}") from None
    if value < low:
        raise _bad_parameter(f"{name} must be >= {low}")
    return value


def _series_params(bundle: ArtifactBundle, granularity, from_, to, country):
    if granularity is None:
        granularity = "day"
    if granularity not in GRANULARITIES:
        raise _bad_parameter(f"granularity must be one of {GRANULARITIES}")
    periods = bundle.snapshot.periods(granularity)
    if from_ is None:
        from_ = periods[0] if periods else None
    if to is None:
        to = periods[-1] if periods else None
    if country is not None and not _COUNTRY_RE.match(country):
        raise _bad_parameter("country must be a two-letter uppercase code")
    return granularity, from_, to, country


def _run_query(bundle, metric, granularity, from_, to, country):
    granularity, from_, to, country = _series_params(
        bundle, granularity, from_, to, country)
    if from_ is None:
        return {"metric": metric, "granularity": granularity,
                "from": None, "to": None, "country": country, "series": []}
    try:
        series = query(bundle.snapshot, metric, granularity, from_, to, country)
    except InvalidRange as exc:
        raise ApiError(400, "invalid_range", str(exc)) from None
    except ValueError as exc:
        raise _bad_parameter(str(exc)) from None
    return {"metric": metric, "granularity": granularity, "from": from_,
            "to": to, "country": country, "series": series}


def create_app(
    data_dir: str | Path,
    cors_origin: str | None = None,
    store: ArtifactStore | None = None,
) -> FastAPI:
    app = FastAPI(title="tweetscope", docs_url=None, redoc_url=None)
    if store is None:
        store = ArtifactStore(data_dir)
        store.reload()
    app.state.store = store

    if cors_origin:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(
            CORSMiddleware,
            allow_origins=[cors_origin],
            allow_methods=["GET"],
            allow_headers=["*"],
        )

    @app.exception_handler(ApiError)
    async def _api_error(_request: Request, exc: ApiError):
        return JSONResponse(
            status_code=exc.status,
            content={"status": exc.status, "code": exc.code,
                     "message": exc.message},
        )

    @app.get("/api/v1/volume")
    def volume(request: Request):
        raw = request.query_params
        return _run_query(store.require(), "volume", raw.get("granularity"),
                          raw.get("from"), raw.get("to"), raw.get("country"))

    @app.get("/api/v1/sentiment")
    def sentiment(request: Request):
        raw = request.query_params
        return _run_query(store.require(), "sentiment", raw.get("granularity"),
                          raw.get("from"), raw.get("to"), raw.get("country"))

    @app.get("/api/v1/emotions")
    def emotions(request: Request):
        raw = request.query_params
        return _run_query(store.require(), "emotions", raw.get("granularity"),
                          raw.get("from"), raw.get("to"), raw.get("country"))

    @app.get("/api/v1/topics")
    def topics(request: Request):
        bundle = store.require()
        raw = request.query_params
        week = raw.get("week")
        if week is None:
            raise _bad_parameter("week is required (e.g. 2020-W11)")
        stored = bundle.topics["n_words_stored"]
        n_words = _parse_int(raw.get("n_words"), "n_words", default=10)
        n_words = min(n_words, stored)
        weeks = bundle.topics["weeks"]
        if week not in weeks:
            raise ApiError(404, "unknown_week",
                           f"no topic model for week {week!r}")
        topics_payload = [
            {"topic": entry["topic"],
             "words": [[term, prob] for term, prob in entry["words"][:n_words]]}
            for entry in weeks[week]["topics"]
        ]
        return {"week": week, "n_words": n_words, "topics": topics_payload}

    @app.get("/api/v1/controversy/terms")
    def controversy_terms():
        bundle = store.require()
        doc = bundle.controversy
        return {
            "terms": [
                {
                    "term": term,
                    "total_hits": doc["results"][term]["total_hits"],
                    "breakdown": doc["results"][term]["breakdown"],
                }
                for term in doc["terms"]
            ]
        }

    @app.get("/api/v1/controversy/cooccurrence")
    def controversy_cooccurrence(request: Request):
        bundle = store.require()
        raw = request.query_params
        term = raw.get("term")
        if term is None:
            raise _bad_parameter("term is required")
        doc = bundle.controversy
        if term not in doc["terms"]:
            raise ApiError(404, "unknown_term", f"term not tracked: {term!r}")
        top_n = _parse_int(raw.get("top_n"), "top_n", default=25)
        result = doc["results"][term]
        return {
            "term": term,
            "total_hits": result["total_hits"],
            "top": [
                {"token": tok, "count": n}
                for tok, n in result["cooccurrence"][:top_n]
            ],
        }

    @app.get("/api/v1/meta")
    def meta():
        bundle = store.require()
        days = bundle.snapshot.periods("day")
        weeks = bundle.snapshot.periods("week")
        return {
            "corpus_id": bundle.snapshot.corpus_id,
            "built_at": bundle.snapshot.built_at,
            "date_range": {
                "from_day": days[0] if days else None,
                "to_day": days[-1] if days else None,
                "from_week": weeks[0] if weeks else None,
                "to_week": weeks[-1] if weeks else None,
            },
            "countries": bundle.snapshot.countries(),
            "weeks": weeks,
            "topic_weeks": sorted(bundle.topics["weeks"]),
            "controversy_terms": list(bundle.controversy["terms"]),
        }

    return app
