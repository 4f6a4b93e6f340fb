"""HTTP JSON API over an open index, plus the shared response renderer.

The CLI `search` command and GET /api/search build their payloads with
the same functions and serialize them with canonical_json, so their
output bytes are identical for identical parameters.
"""

import json
import os
from dataclasses import dataclass, field

from fastapi import FastAPI, Response
from fastapi.staticfiles import StaticFiles

from .analysis import FIELDS
from .corpus import DEFAULT_WINDOW_RADIUS
from .errors import ConfigError, QueryError, UnknownFieldError
from .index import IndexReader
from .ranking import (
    Bm25Params,
    DEFAULT_PAGE_SIZE,
    DEFAULT_WEIGHTS,
    MAX_PAGE_SIZE,
    SearchHit,
    parse_query,
    search,
)


@dataclass
class ServiceConfig:
    index_dir: str = ""
    listen_address: str = "127.0.0.1:8080"
    page_size_default: int = DEFAULT_PAGE_SIZE
    field_weights: dict[str, float] = field(
        default_factory=lambda: dict(DEFAULT_WEIGHTS)
    )
    bm25: Bm25Params = field(default_factory=Bm25Params)
    window_radius: int = DEFAULT_WINDOW_RADIUS


def load_config(path: str | None = None) -> ServiceConfig:
    """ServiceConfig from a JSON file; unknown or invalid keys are errors."""
    config = ServiceConfig()
    if path is None:
        return config
    try:
        with open(path, encoding="utf-8") as handle:
            obj = json.load(handle)
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    except ValueError as exc:
        raise ConfigError(f"config file {path} is not valid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise ConfigError("config file must hold a JSON object")
    known = {
        "index_dir",
        "listen_address",
        "page_size_default",
        "field_weights",
        "bm25",
        "window_radius",
    }
    for key in obj:
        if key not in known:
            raise ConfigError(f"unknown config key: {key!r}")
    if "index_dir" in obj:
        config.index_dir = str(obj["index_dir"])
    if "listen_address" in obj:
        config.listen_address = str(obj["listen_address"])
    if "page_size_default" in obj:
        size = obj["page_size_default"]
        if not isinstance(size, int) or not 1 <= size <= MAX_PAGE_SIZE:
            raise ConfigError(
                f"page_size_default must be an integer in [1, {MAX_PAGE_SIZE}]"
            )
        config.page_size_default = size
    if "field_weights" in obj:
        weights = obj["field_weights"]
        if not isinstance(weights, dict):
            raise ConfigError("field_weights must be an object")
        merged = dict(DEFAULT_WEIGHTS)
        for fld, value in weights.items():
            if fld not in FIELDS:
                raise ConfigError(f"field_weights has unknown field: {fld!r}")
            if not isinstance(value, (int, float)) or value <= 0:
                raise ConfigError(f"field_weights[{fld!r}] must be positive")
            merged[fld] = float(value)
        config.field_weights = merged
    if "bm25" in obj:
        bm25 = obj["bm25"]
        if not isinstance(bm25, dict) or set(bm25) - {"k1", "b"}:
            raise ConfigError("bm25 must be an object with keys k1 and b")
        k1 = float(bm25.get("k1", Bm25Params.k1))
        b = float(bm25.get("b", Bm25Params.b))
        if k1 < 0 or not 0 <= b <= 1:
            raise ConfigError("bm25 requires k1 >= 0 and b in [0, 1]")
        config.bm25 = Bm25Params(k1=k1, b=b)
    if "window_radius" in obj:
        radius = obj["window_radius"]
        if not isinstance(radius, int) or radius <= 0:
            raise ConfigError("window_radius must be a positive integer")
        config.window_radius = radius
    return config


def canonical_json(obj) -> str:
    """Compact deterministic JSON; dict insertion order is the key order."""
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":"), allow_nan=False)


def parse_fields_param(fields_csv: str | None) -> set[str]:
    """Comma-separated field names to a set; empty means all fields."""
    selected: set[str] = set()
    if not fields_csv:
        return selected
    for name in fields_csv.split(","):
        name = name.strip()
        if name:
            selected.add(name)
    return selected


def _hit_payload(hit: SearchHit) -> dict:
    return {
        "arxiv_id": hit.arxiv_id,
        "url": hit.url,
        "title": hit.title,
        "authors": hit.authors,
        "score": hit.score,
        "matched_fields": list(hit.matched_fields),
        "snippets": {
            fld: [
                {"text": s.text, "highlights": [[a, b] for a, b in s.highlights]}
                for s in snips
            ]
            for fld, snips in hit.snippets.items()
        },
    }


def search_payload(
    reader: IndexReader,
    q: str,
    fields_csv: str | None,
    page: int,
    size: int,
    config: ServiceConfig,
) -> dict:
    query = parse_query(q, parse_fields_param(fields_csv), page=page, page_size=size)
    total, hits = search(
        reader, query, weights=config.field_weights, params=config.bm25
    )
    return {
        "total": total,
        "page": query.page,
        "size": query.page_size,
        "hits": [_hit_payload(h) for h in hits],
    }


def paper_payload(reader: IndexReader, arxiv_id: str) -> dict | None:
    doc_id = reader.doc_id_for(arxiv_id)
    if doc_id is None:
        return None
    doc = reader.stored(doc_id)
    return {
        "arxiv_id": doc.arxiv_id,
        "url": doc.url,
        "year": doc.year,
        "fields": {fld: doc.fields[fld] for fld in FIELDS},
        "pseudocodes": list(doc.pseudocodes),
    }


def create_app(
    reader: IndexReader | None,
    config: ServiceConfig | None = None,
    static_dir: str | None = None,
) -> FastAPI:
    """The API application; static assets are served when static_dir exists."""
    config = config or ServiceConfig()
    app = FastAPI(openapi_url=None, docs_url=None, redoc_url=None)

    def _json(payload, status: int = 200) -> Response:
        return Response(
            content=canonical_json(payload),
            media_type="application/json",
            status_code=status,
        )

    def _int_param(name: str, value: str | None, default: int) -> int:
        if value is None or value == "":
            return default
        try:
            return int(value)
        except ValueError:
            raise QueryError(f"{name} must be an integer, got {value!r}") from None

    @app.get("/api/search")
    def api_search(
        q: str | None = None,
        fields: str | None = None,
        page: str | None = None,
        size: str | None = None,
    ) -> Response:
        if reader is None:
            return _json({"error": "index unavailable"}, 503)
        try:
            payload = search_payload(
                reader,
                q or "",
                fields,
                _int_param("page", page, 1),
                _int_param("size", size, config.page_size_default),
                config,
            )
        except (QueryError, UnknownFieldError) as exc:
            return _json({"error": str(exc)}, 400)
        return _json(payload)

    @app.get("/api/paper/{arxiv_id:path}")
    def api_paper(arxiv_id: str) -> Response:
        if reader is None:
            return _json({"error": "index unavailable"}, 503)
        payload = paper_payload(reader, arxiv_id)
        if payload is None:
            return _json({"error": f"unknown arxiv_id: {arxiv_id!r}"}, 404)
        return _json(payload)

    @app.get("/api/health")
    def api_health() -> Response:
        return _json({"status": "ok"})

    if static_dir and os.path.isdir(static_dir):
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="static")
    return app
