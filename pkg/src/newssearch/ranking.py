"""Okapi BM25 scoring with a TF-IDF baseline.

The BM25 variant used here:

    score(q, d) = sum over distinct query terms t of
        idf(t) * tf * (k1 + 1) / (tf + k1 * (1 - b + b * doc_len / avg_doc_len))
    idf(t) = ln((N - df + 0.5) / (df + 0.5) + 1)

The +1 inside the log keeps idf non-negative even when a term appears in
more than half the corpus, so a near-stopword can never subtract from a
score. Duplicate query terms are collapsed; there is no query-side tf
weighting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .inverted_index import InvertedIndex, UnknownDocumentError


@dataclass(frozen=True)
class RankingParams:
    k1: float = 1.2
    b: float = 0.75

    def __post_init__(self) -> None:
        if not self.k1 > 0:
            raise ValueError(f"k1 must be > 0, got {self.k1}")
        if not 0.0 <= self.b <= 1.0:
            raise ValueError(f"b must be in [0, 1], got {self.b}")


DEFAULT_PARAMS = RankingParams()

RANKERS = ("bm25", "tfidf")


class ScoredDoc(NamedTuple):
    doc_id: int
    score: float


def _check_doc(index: InvertedIndex, doc_id: int) -> None:
    if doc_id not in index:
        raise UnknownDocumentError(doc_id)


def bm25_score(
    query_terms: Iterable[str],
    doc_id: int,
    index: InvertedIndex,
    params: RankingParams = DEFAULT_PARAMS,
) -> float:
    _check_doc(index, doc_id)
    n = index.stats.n_docs
    avg_len = index.stats.avg_doc_len
    score = 0.0
    for term in set(query_terms):
        plist = index.lookup(term)
        if plist is None:
            continue
        posting = next((p for p in plist.postings if p.doc_id == doc_id), None)
        if posting is None:
            continue
        idf = math.log((n - plist.df + 0.5) / (plist.df + 0.5) + 1.0)
        norm = params.k1 * (1.0 - params.b + params.b * posting.doc_len / avg_len)
        score += idf * posting.tf * (params.k1 + 1.0) / (posting.tf + norm)
    return score


def tfidf_score(query_terms: Iterable[str], doc_id: int, index: InvertedIndex) -> float:
    """Baseline sum of tf * ln(N / df) over distinct query terms."""
    _check_doc(index, doc_id)
    n = index.stats.n_docs
    score = 0.0
    for term in set(query_terms):
        plist = index.lookup(term)
        if plist is None:
            continue
        posting = next((p for p in plist.postings if p.doc_id == doc_id), None)
        if posting is None:
            continue
        score += posting.tf * math.log(n / plist.df)
    return score


def rank(
    candidates: Iterable[int],
    query_terms: Iterable[str],
    index: InvertedIndex,
    params: RankingParams = DEFAULT_PARAMS,
    ranker: str = "bm25",
) -> list[ScoredDoc]:
    """Score candidates and sort descending; ties break by ascending doc_id."""
    if ranker not in RANKERS:
        raise ValueError(f"unknown ranker {ranker!r}")
    terms = set(query_terms)
    candidate_ids = sorted(set(candidates))
    for doc_id in candidate_ids:
        _check_doc(index, doc_id)

    # One pass over the query terms' postings instead of per-doc scans.
    n = index.stats.n_docs
    avg_len = index.stats.avg_doc_len
    scores = {doc_id: 0.0 for doc_id in candidate_ids}
    wanted = set(candidate_ids)
    for term in terms:
        plist = index.lookup(term)
        if plist is None:
            continue
        idf = math.log((n - plist.df + 0.5) / (plist.df + 0.5) + 1.0)
        for posting in plist.postings:
            if posting.doc_id not in wanted:
                continue
            if ranker == "bm25":
                norm = params.k1 * (1.0 - params.b + params.b * posting.doc_len / avg_len)
                scores[posting.doc_id] += (
                    idf * posting.tf * (params.k1 + 1.0) / (posting.tf + norm)
                )
            else:
                scores[posting.doc_id] += posting.tf * math.log(n / plist.df)
    ranked = [ScoredDoc(doc_id, score) for doc_id, score in scores.items()]
    ranked.sort(key=lambda sd: (-sd.score, sd.doc_id))
    return ranked
