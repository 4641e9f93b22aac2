"""JSONL-backed store of news documents grouped by category label.

A corpus file is UTF-8 JSON Lines: one object per line with exactly the
fields ``id, label, url, title, dt, article``. The store validates on load
and never mints ids; the crawler assigns them at staging time.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from datetime import date
from pathlib import Path
from typing import Iterable

DOCUMENT_FIELDS = ("id", "label", "url", "title", "dt", "article")


class CorpusError(Exception):
    """Invalid corpus file or document record."""


@dataclass(frozen=True)
class Document:
    """One news record: category label, url, title, ISO date, and body text."""

    id: int
    label: str
    url: str
    title: str
    dt: str
    article: str

    def __post_init__(self) -> None:
        if not isinstance(self.id, int) or isinstance(self.id, bool) or self.id < 1:
            raise CorpusError(f"document id must be a positive integer, got {self.id!r}")
        if not self.label:
            raise CorpusError(f"document {self.id}: label must be non-empty")
        if not self.title:
            raise CorpusError(f"document {self.id}: title must be non-empty")
        try:
            date.fromisoformat(self.dt)
        except (TypeError, ValueError):
            raise CorpusError(
                f"document {self.id}: dt {self.dt!r} is not a valid YYYY-MM-DD date"
            ) from None

    @classmethod
    def from_dict(cls, raw: dict) -> "Document":
        missing = [f for f in DOCUMENT_FIELDS if f not in raw]
        if missing:
            raise CorpusError(f"missing fields: {', '.join(missing)}")
        extra = [k for k in raw if k not in DOCUMENT_FIELDS]
        if extra:
            raise CorpusError(f"unknown fields: {', '.join(extra)}")
        return cls(**{f: raw[f] for f in DOCUMENT_FIELDS})

    def to_dict(self) -> dict:
        return {f: getattr(self, f) for f in DOCUMENT_FIELDS}


class Corpus:
    """Immutable ordered collection of documents with a label -> ids index.

    Mutation happens only by constructing a new Corpus, so a loaded corpus
    is safe to share across threads.
    """

    def __init__(self, documents: Iterable[Document]):
        docs = tuple(documents)
        by_id: dict[int, Document] = {}
        label_index: dict[str, set[int]] = {}
        for doc in docs:
            if doc.id in by_id:
                raise CorpusError(f"duplicate document id {doc.id}")
            by_id[doc.id] = doc
            label_index.setdefault(doc.label, set()).add(doc.id)
        self._documents = docs
        self._by_id = by_id
        self._label_index = label_index

    @property
    def documents(self) -> tuple[Document, ...]:
        return self._documents

    def __len__(self) -> int:
        return len(self._documents)

    def __iter__(self):
        return iter(self._documents)

    def get(self, doc_id: int) -> Document | None:
        return self._by_id.get(doc_id)

    def labels(self) -> set[str]:
        return set(self._label_index)

    def docs_by_label(self, label: str) -> set[int]:
        """Ids of documents whose label equals ``label`` exactly (case-sensitive)."""
        return set(self._label_index.get(label, ()))


def docs_by_label(corpus: Corpus, label: str) -> set[int]:
    return corpus.docs_by_label(label)


def load_corpus(path: str | Path) -> Corpus:
    """Load a JSONL corpus file; errors carry the offending line number."""
    docs: list[Document] = []
    seen: set[int] = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            try:
                raw = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusError(f"{path}:{lineno}: malformed JSON: {exc.msg}") from None
            if not isinstance(raw, dict):
                raise CorpusError(f"{path}:{lineno}: expected a JSON object")
            try:
                doc = Document.from_dict(raw)
            except CorpusError as exc:
                raise CorpusError(f"{path}:{lineno}: {exc}") from None
            if doc.id in seen:
                raise CorpusError(f"{path}:{lineno}: duplicate document id {doc.id}")
            seen.add(doc.id)
            docs.append(doc)
    return Corpus(docs)


def save_corpus(corpus: Corpus, path: str | Path) -> None:
    """Write JSONL such that load_corpus(path) reproduces the corpus exactly."""
    with open(path, "w", encoding="utf-8") as fh:
        for doc in corpus:
            fh.write(json.dumps(doc.to_dict(), ensure_ascii=False))
            fh.write("\n")
