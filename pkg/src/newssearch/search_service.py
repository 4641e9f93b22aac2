"""End-to-end classified search plus the HTTP JSON API around it.

Search steps: normalize the query through the same pipeline the index was
built with; resolve each term exactly or substitute the best fuzzy
candidate (recorded, so callers can surface "showing results for ...");
union the posting doc-ids (OR semantics); optionally intersect with one
category; rank; truncate; attach sentiment to the returned page only.

All shared state lives in an immutable Snapshot swapped atomically on
reload, so request handling is freely concurrent and a fixed snapshot
answers identical queries with byte-identical bodies.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import Response

from .corpus_store import Corpus, load_corpus
from .inverted_index import InvertedIndex, load_index
from .ranking import DEFAULT_PARAMS, RANKERS, RankingParams, rank
from .sentiment import Lexicon, SentimentScore, load_lexicon, score_document
from .similarity import related
from .text_pipeline import PipelineConfig, pipeline


class EmptyQueryError(Exception):
    """Query text normalized to zero terms."""


@dataclass(frozen=True)
class Query:
    text: str
    category: str | None = None
    limit: int = 10
    ranker: str = "bm25"
    params: RankingParams = field(default=DEFAULT_PARAMS)

    def __post_init__(self) -> None:
        if self.limit < 1:
            raise ValueError(f"limit must be >= 1, got {self.limit}")
        if self.ranker not in RANKERS:
            raise ValueError(f"unknown ranker {self.ranker!r}")


@dataclass(frozen=True)
class SearchResult:
    doc_id: int
    title: str
    url: str
    label: str
    dt: str
    score: float
    sentiment: SentimentScore
    matched_terms: tuple[str, ...]
    fuzzy_substitutions: dict[str, str]

    def to_dict(self) -> dict:
        return {
            "id": self.doc_id,
            "title": self.title,
            "url": self.url,
            "label": self.label,
            "dt": self.dt,
            "score": self.score,
            "sentiment": self.sentiment.to_dict(),
            "matched_terms": list(self.matched_terms),
            "fuzzy_substitutions": dict(self.fuzzy_substitutions),
        }


@dataclass(frozen=True)
class SearchResponse:
    results: tuple[SearchResult, ...]
    total_candidates: int
    category_unknown: bool = False

    def to_dict(self) -> dict:
        payload = {
            "results": [r.to_dict() for r in self.results],
            "total_candidates": self.total_candidates,
        }
        if self.category_unknown:
            payload["category_unknown"] = True
        return payload


@dataclass(frozen=True)
class Snapshot:
    """Everything a request needs, loaded from one build, never mutated."""

    corpus: Corpus
    index: InvertedIndex
    lexicon: Lexicon

    @property
    def pipeline_config(self) -> PipelineConfig:
        return PipelineConfig(stemming_enabled=self.index.stemming_enabled)


def search(query: Query, snapshot: Snapshot) -> SearchResponse:
    index, corpus = snapshot.index, snapshot.corpus
    terms = list(dict.fromkeys(pipeline(query.text, snapshot.pipeline_config)))
    if not terms:
        raise EmptyQueryError("query normalized to zero terms")

    substitutions: dict[str, str] = {}
    resolved: list[str] = []
    for term in terms:
        if index.lookup(term) is not None:
            resolved.append(term)
        else:
            candidates = index.fuzzy_terms(term, limit=1)
            if candidates:
                substitutions[term] = candidates[0]
                resolved.append(candidates[0])
    resolved = list(dict.fromkeys(resolved))

    term_docs = {term: index.lookup(term).doc_ids() for term in resolved}
    candidates: set[int] = set().union(*term_docs.values()) if term_docs else set()

    if query.category is not None:
        if query.category not in corpus.labels():
            return SearchResponse(results=(), total_candidates=0, category_unknown=True)
        candidates &= corpus.docs_by_label(query.category)

    ranked = rank(candidates, resolved, index, query.params, query.ranker)
    results = []
    for scored in ranked[: query.limit]:
        doc = corpus.get(scored.doc_id)
        results.append(
            SearchResult(
                doc_id=doc.id,
                title=doc.title,
                url=doc.url,
                label=doc.label,
                dt=doc.dt,
                score=scored.score,
                sentiment=score_document(doc, snapshot.lexicon),
                matched_terms=tuple(t for t in resolved if doc.id in term_docs[t]),
                fuzzy_substitutions=dict(substitutions),
            )
        )
    return SearchResponse(results=tuple(results), total_candidates=len(candidates))


@dataclass(frozen=True)
class ServicePaths:
    corpus: Path
    index: Path
    lexicon: Path


def load_snapshot(paths: ServicePaths) -> Snapshot:
    return Snapshot(
        corpus=load_corpus(paths.corpus),
        index=load_index(paths.index),
        lexicon=load_lexicon(paths.lexicon),
    )


def _json_response(payload: dict, status_code: int = 200) -> Response:
    body = json.dumps(payload, ensure_ascii=False, separators=(",", ":"))
    return Response(content=body, media_type="application/json", status_code=status_code)


def _error(status_code: int, code: str, message: str) -> Response:
    return _json_response({"error": {"code": code, "message": message}}, status_code)


def _parse_int(raw: str | None, default: int, name: str) -> int:
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer") from None


def _parse_float(raw: str | None, default: float, name: str) -> float:
    if raw is None:
        return default
    try:
        return float(raw)
    except ValueError:
        raise ValueError(f"{name} must be a number") from None


def create_app(paths: ServicePaths) -> FastAPI:
    """Build the service app; snapshot load failures abort startup loudly."""
    app = FastAPI(title="newssearch", docs_url=None, redoc_url=None)
    app.state.paths = paths
    app.state.snapshot = load_snapshot(paths)

    @app.get("/search")
    def search_endpoint(request: Request) -> Response:
        snapshot: Snapshot = request.app.state.snapshot
        params = request.query_params
        try:
            query = Query(
                text=params.get("q", ""),
                category=params.get("category"),
                limit=_parse_int(params.get("limit"), 10, "limit"),
                ranker=params.get("ranker", "bm25"),
                params=RankingParams(
                    k1=_parse_float(params.get("k1"), DEFAULT_PARAMS.k1, "k1"),
                    b=_parse_float(params.get("b"), DEFAULT_PARAMS.b, "b"),
                ),
            )
        except ValueError as exc:
            return _error(400, "invalid_parameter", str(exc))
        try:
            response = search(query, snapshot)
        except EmptyQueryError:
            return _error(400, "empty_query", "query text contains no searchable terms")
        return _json_response(response.to_dict())

    @app.get("/doc/{doc_id}")
    def doc_endpoint(doc_id: int, request: Request) -> Response:
        snapshot: Snapshot = request.app.state.snapshot
        doc = snapshot.corpus.get(doc_id)
        if doc is None:
            return _error(404, "unknown_doc", f"no document with id {doc_id}")
        return _json_response(doc.to_dict())

    @app.get("/related/{doc_id}")
    def related_endpoint(doc_id: int, request: Request) -> Response:
        snapshot: Snapshot = request.app.state.snapshot
        try:
            k = _parse_int(request.query_params.get("k"), 5, "k")
        except ValueError as exc:
            return _error(400, "invalid_parameter", str(exc))
        if doc_id not in snapshot.index:
            return _error(404, "unknown_doc", f"no indexed document with id {doc_id}")
        neighbors = related(doc_id, k, snapshot.index)
        payload = {
            "id": doc_id,
            "related": [
                {
                    "id": other,
                    "similarity": sim,
                    "title": snapshot.corpus.get(other).title if snapshot.corpus.get(other) else None,
                    "label": snapshot.corpus.get(other).label if snapshot.corpus.get(other) else None,
                }
                for other, sim in neighbors
            ],
        }
        return _json_response(payload)

    @app.get("/categories")
    def categories_endpoint(request: Request) -> Response:
        snapshot: Snapshot = request.app.state.snapshot
        return _json_response({"categories": sorted(snapshot.corpus.labels())})

    @app.get("/stats")
    def stats_endpoint(request: Request) -> Response:
        stats = request.app.state.snapshot.index.stats
        return _json_response(
            {
                "n_docs": stats.n_docs,
                "n_terms": stats.n_terms,
                "avg_doc_len": stats.avg_doc_len,
            }
        )

    @app.post("/admin/reload")
    def reload_endpoint(request: Request) -> Response:
        try:
            fresh = load_snapshot(request.app.state.paths)
        except Exception as exc:
            return _error(500, "reload_failed", str(exc))
        request.app.state.snapshot = fresh  # atomic swap
        return _json_response({"status": "ok", "n_docs": fresh.index.stats.n_docs})

    return app
