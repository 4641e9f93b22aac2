"""Document-to-document similarity for "related articles" suggestions.

Cosine over sparse TF-IDF term vectors (weight = tf * ln(N / df); terms
that appear in every document carry zero weight and are omitted). Pairwise
computation is exhaustive, which is fine at news-corpus scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .inverted_index import InvertedIndex, UnknownDocumentError


@dataclass(frozen=True)
class DocVector:
    doc_id: int
    weights: dict[str, float]


def _vectors_for(index: InvertedIndex, doc_ids: set[int] | None) -> dict[int, dict[str, float]]:
    """One pass over the postings, building vectors for the requested docs."""
    n = index.stats.n_docs
    wanted = index.doc_lens.keys() if doc_ids is None else doc_ids
    vectors: dict[int, dict[str, float]] = {doc_id: {} for doc_id in wanted}
    for plist in index.posting_lists():
        if plist.df >= n:
            continue
        idf = math.log(n / plist.df)
        for posting in plist.postings:
            if posting.doc_id in vectors:
                vectors[posting.doc_id][plist.term] = posting.tf * idf
    return vectors


def doc_vector(doc_id: int, index: InvertedIndex) -> DocVector:
    if doc_id not in index:
        raise UnknownDocumentError(doc_id)
    return DocVector(doc_id, _vectors_for(index, {doc_id})[doc_id])


def cosine(a: DocVector, b: DocVector) -> float:
    if not a.weights or not b.weights:
        return 0.0
    small, large = (a.weights, b.weights) if len(a.weights) <= len(b.weights) else (b.weights, a.weights)
    dot = sum(w * large.get(term, 0.0) for term, w in small.items())
    norm_a = math.sqrt(sum(w * w for w in a.weights.values()))
    norm_b = math.sqrt(sum(w * w for w in b.weights.values()))
    return dot / (norm_a * norm_b)


def related(doc_id: int, k: int, index: InvertedIndex) -> list[tuple[int, float]]:
    """The k most similar other documents, descending, ties by ascending id."""
    if doc_id not in index:
        raise UnknownDocumentError(doc_id)
    if k <= 0:
        return []
    vectors = _vectors_for(index, None)
    query = DocVector(doc_id, vectors[doc_id])
    scored = [
        (other, cosine(query, DocVector(other, weights)))
        for other, weights in vectors.items()
        if other != doc_id
    ]
    scored.sort(key=lambda pair: (-pair[1], pair[0]))
    return scored[:k]
