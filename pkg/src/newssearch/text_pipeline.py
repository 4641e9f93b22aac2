"""Deterministic text normalization for indexing and querying.

Split on whitespace, strip punctuation, lowercase, drop the six-determiner
stopword list, and optionally Porter-stem. The same pipeline must run on
documents and queries for lookups to line up.
"""

from __future__ import annotations

import string
from dataclasses import dataclass, field

from . import porter

DEFAULT_STOPWORDS = frozenset({"a", "that", "the", "an", "and", "those"})

# ASCII punctuation plus the typographic quotes/dashes/ellipsis that news
# text actually contains. Digits are kept ("covid 19" must survive).
ASCII_PUNCTUATION = string.punctuation
TYPOGRAPHIC_PUNCTUATION = "‘’‚‛“”„‟‹›«»‐‑‒–—―…·"
STRIP_CHARS = ASCII_PUNCTUATION + TYPOGRAPHIC_PUNCTUATION

_STRIP_TABLE = str.maketrans("", "", STRIP_CHARS)


@dataclass(frozen=True)
class PipelineConfig:
    """Normalization settings; the defaults match the indexing pipeline."""

    stopwords: frozenset[str] = field(default=DEFAULT_STOPWORDS)
    stemming_enabled: bool = False


DEFAULT_CONFIG = PipelineConfig()

# Sentiment scoring keeps every surface word: stopword removal could break
# booster adjacency and stemming would miss lexicon surface forms.
SENTIMENT_CONFIG = PipelineConfig(stopwords=frozenset(), stemming_enabled=False)


def tokenize(text: str) -> list[str]:
    """Split on runs of whitespace, dropping empty strings."""
    return text.split()


def normalize(words: list[str], config: PipelineConfig = DEFAULT_CONFIG) -> list[str]:
    """Strip punctuation, lowercase, drop stopwords/empties, optionally stem."""
    out: list[str] = []
    for word in words:
        word = word.translate(_STRIP_TABLE).lower()
        if not word or word in config.stopwords:
            continue
        if config.stemming_enabled:
            word = porter.stem(word)
            if word in config.stopwords:
                continue
        out.append(word)
    return out


def pipeline(text: str, config: PipelineConfig = DEFAULT_CONFIG) -> list[str]:
    return normalize(tokenize(text), config)


def stem(word: str) -> str:
    """Porter stem of an already lowercase, punctuation-free word."""
    return porter.stem(word)
