"""Term -> postings map with document frequencies, persisted to disk.

Each posting is a (doc_id, tf, doc_len) triple; doc_len is the token count
of the indexed text after the pipeline, which BM25 needs anyway. Built
single-writer, then frozen; query-time operations are read-only.

On-disk layout is a directory: ``stats.json`` (versioned header, corpus
stats, per-doc lengths, build settings) plus ``postings.jsonl`` with one
posting list per line.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .corpus_store import Corpus
from .text_pipeline import DEFAULT_CONFIG, PipelineConfig, pipeline

INDEX_FORMAT_VERSION = 1
DEFAULT_FIELDS = ("title", "article")
INDEXABLE_FIELDS = ("label", "url", "title", "dt", "article")


class IndexFormatError(Exception):
    """Unreadable or wrong-version on-disk index."""


class UnknownDocumentError(KeyError):
    """Operation referenced a doc_id that is not in the index."""


@dataclass(frozen=True)
class Posting:
    doc_id: int
    tf: int
    doc_len: int

    def __post_init__(self) -> None:
        if self.tf < 1:
            raise ValueError(f"tf must be >= 1, got {self.tf}")
        if self.tf > self.doc_len:
            raise ValueError(f"tf {self.tf} exceeds doc_len {self.doc_len}")


@dataclass(frozen=True)
class PostingList:
    term: str
    postings: tuple[Posting, ...]

    def __post_init__(self) -> None:
        ids = [p.doc_id for p in self.postings]
        if any(b <= a for a, b in zip(ids, ids[1:])):
            raise ValueError(f"postings for {self.term!r} not strictly increasing by doc_id")

    @property
    def df(self) -> int:
        return len(self.postings)

    def doc_ids(self) -> set[int]:
        return {p.doc_id for p in self.postings}


@dataclass(frozen=True)
class IndexStats:
    n_docs: int
    avg_doc_len: float
    n_terms: int


class InvertedIndex:
    def __init__(
        self,
        postings: dict[str, PostingList],
        doc_lens: dict[int, int],
        stemming_enabled: bool = False,
        fields: tuple[str, ...] = DEFAULT_FIELDS,
    ):
        self._postings = postings
        self._doc_lens = doc_lens
        self.stemming_enabled = stemming_enabled
        self.fields = tuple(fields)
        n_docs = len(doc_lens)
        total = sum(doc_lens.values())
        self.stats = IndexStats(
            n_docs=n_docs,
            avg_doc_len=total / n_docs if n_docs else 0.0,
            n_terms=len(postings),
        )

    @property
    def doc_lens(self) -> dict[int, int]:
        return self._doc_lens

    def terms(self) -> Iterable[str]:
        return self._postings.keys()

    def __contains__(self, doc_id: int) -> bool:
        return doc_id in self._doc_lens

    def lookup(self, term: str) -> PostingList | None:
        """Exact-match posting list for an already pipeline-normalized term."""
        return self._postings.get(term)

    def posting_lists(self) -> Iterable[PostingList]:
        return self._postings.values()

    def fuzzy_terms(self, raw_term: str, limit: int = 10) -> list[str]:
        """Closest indexed terms for a term that had no exact match.

        Tiers: prefix match, then substring match, then Levenshtein
        distance <= 2; within a tier descending df, then lexicographic.
        """
        if not raw_term:
            raise ValueError("raw_term must be non-empty")
        if limit <= 0:
            return []
        tiers: list[tuple[int, str]] = []
        leftovers: list[str] = []
        for term in self._postings:
            if term == raw_term:
                continue
            if term.startswith(raw_term):
                tiers.append((0, term))
            elif raw_term in term:
                tiers.append((1, term))
            else:
                leftovers.append(term)
        for term in leftovers:
            if _edit_distance_within(raw_term, term, 2):
                tiers.append((2, term))
        tiers.sort(key=lambda t: (t[0], -self._postings[t[1]].df, t[1]))
        return [term for _, term in tiers[:limit]]


def _edit_distance_within(a: str, b: str, limit: int) -> bool:
    """True iff Levenshtein distance(a, b) <= limit; bails out early."""
    if abs(len(a) - len(b)) > limit:
        return False
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        cur = [i]
        for j, cb in enumerate(b, start=1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (ca != cb)))
        if min(cur) > limit:
            return False
        prev = cur
    return prev[-1] <= limit


def build_index(
    corpus: Corpus,
    config: PipelineConfig = DEFAULT_CONFIG,
    fields: tuple[str, ...] = DEFAULT_FIELDS,
) -> InvertedIndex:
    """Index the selected fields of every document through the text pipeline."""
    bad = [f for f in fields if f not in INDEXABLE_FIELDS]
    if bad:
        raise ValueError(f"unknown index fields: {', '.join(bad)}")
    term_postings: dict[str, list[Posting]] = {}
    doc_lens: dict[int, int] = {}
    for doc in corpus:
        text = " ".join(getattr(doc, f) for f in fields)
        tokens = pipeline(text, config)
        doc_lens[doc.id] = len(tokens)
        for term, tf in Counter(tokens).items():
            term_postings.setdefault(term, []).append(Posting(doc.id, tf, len(tokens)))
    postings = {
        term: PostingList(term, tuple(sorted(plist, key=lambda p: p.doc_id)))
        for term, plist in term_postings.items()
    }
    return InvertedIndex(postings, doc_lens, config.stemming_enabled, fields)


def save_index(index: InvertedIndex, path: str | Path) -> None:
    """Write the index directory; load_index(path) reproduces it exactly."""
    path = Path(path)
    path.mkdir(parents=True, exist_ok=True)
    header = {
        "version": INDEX_FORMAT_VERSION,
        "n_docs": index.stats.n_docs,
        "avg_doc_len": index.stats.avg_doc_len,
        "n_terms": index.stats.n_terms,
        "stemming_enabled": index.stemming_enabled,
        "fields": list(index.fields),
        "doc_lens": {str(doc_id): n for doc_id, n in sorted(index.doc_lens.items())},
    }
    with open(path / "stats.json", "w", encoding="utf-8") as fh:
        json.dump(header, fh, ensure_ascii=False, indent=2)
        fh.write("\n")
    with open(path / "postings.jsonl", "w", encoding="utf-8") as fh:
        for term in sorted(index.terms()):
            plist = index.lookup(term)
            record = {
                "term": term,
                "df": plist.df,
                "postings": [[p.doc_id, p.tf, p.doc_len] for p in plist.postings],
            }
            fh.write(json.dumps(record, ensure_ascii=False))
            fh.write("\n")


def load_index(path: str | Path) -> InvertedIndex:
    path = Path(path)
    stats_path = path / "stats.json"
    postings_path = path / "postings.jsonl"
    if not stats_path.exists() or not postings_path.exists():
        raise IndexFormatError(f"{path} is not an index directory")
    with open(stats_path, encoding="utf-8") as fh:
        header = json.load(fh)
    version = header.get("version")
    if version != INDEX_FORMAT_VERSION:
        raise IndexFormatError(
            f"unsupported index version {version!r} (expected {INDEX_FORMAT_VERSION})"
        )
    doc_lens = {int(doc_id): n for doc_id, n in header["doc_lens"].items()}
    postings: dict[str, PostingList] = {}
    with open(postings_path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
                plist = PostingList(
                    record["term"],
                    tuple(Posting(d, tf, dl) for d, tf, dl in record["postings"]),
                )
                if record["df"] != plist.df:
                    raise ValueError(f"df {record['df']} != {plist.df} postings")
            except (KeyError, TypeError, ValueError) as exc:
                raise IndexFormatError(f"{postings_path}:{lineno}: {exc}") from None
            if plist.term in postings:
                raise IndexFormatError(f"{postings_path}:{lineno}: duplicate term {plist.term!r}")
            postings[plist.term] = plist
    index = InvertedIndex(
        postings,
        doc_lens,
        stemming_enabled=bool(header.get("stemming_enabled", False)),
        fields=tuple(header.get("fields", DEFAULT_FIELDS)),
    )
    if index.stats.n_terms != header["n_terms"] or index.stats.n_docs != header["n_docs"]:
        raise IndexFormatError(f"{stats_path}: header stats disagree with postings")
    return index
