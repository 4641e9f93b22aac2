"""Lexicon-based sentiment strength scoring.

Each document gets a positive strength in [1, 5] and a negative strength in
[-5, -1] (1 and -1 mean "no sentiment of that sign"), a fixed neutral
component of 0, and the overall polarity

    polarity = (positive + neutral + negative) / 3

classified positive/neutral/negative by sign. Scoring rules: a booster
word immediately before a lexicon word shifts its magnitude; a negator
within the two preceding tokens flips the sign and halves the magnitude
(rounded up, so it never drops below 1). Sentences are scored
independently; a document takes the max positive and min negative over its
sentences.
"""

from __future__ import annotations

import math
import re
import statistics
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping

from .corpus_store import Corpus, Document
from .text_pipeline import SENTIMENT_CONFIG, pipeline

POSITIVE = "positive"
NEUTRAL = "neutral"
NEGATIVE = "negative"
CLASSES = (NEGATIVE, NEUTRAL, POSITIVE)

_SENTENCE_SPLIT = re.compile(r"[.!?]")
_BOOSTER_VALUES = (-1, 1, 2)


class LexiconError(Exception):
    """Invalid lexicon file or entry."""


@dataclass(frozen=True)
class Lexicon:
    term_strengths: Mapping[str, int]
    boosters: Mapping[str, int]
    negators: frozenset[str]


@dataclass(frozen=True)
class SentimentScore:
    positive: int
    negative: int
    neutral: int = 0

    def __post_init__(self) -> None:
        if not 1 <= self.positive <= 5:
            raise ValueError(f"positive strength must be in [1, 5], got {self.positive}")
        if not -5 <= self.negative <= -1:
            raise ValueError(f"negative strength must be in [-5, -1], got {self.negative}")
        if self.neutral != 0:
            raise ValueError(f"neutral component is fixed at 0, got {self.neutral}")

    @property
    def polarity(self) -> float:
        return (self.positive + self.neutral + self.negative) / 3

    @property
    def polarity_class(self) -> str:
        if self.polarity > 0:
            return POSITIVE
        if self.polarity < 0:
            return NEGATIVE
        return NEUTRAL

    def to_dict(self) -> dict:
        return {
            "positive": self.positive,
            "negative": self.negative,
            "neutral": self.neutral,
            "polarity": self.polarity,
            "class": self.polarity_class,
        }


def score_sentence(tokens: list[str], lexicon: Lexicon) -> tuple[int, int]:
    """Positive and negative strengths of one sentence's tokens.

    Tokens must be normalized without stopword removal or stemming
    (SENTIMENT_CONFIG) so negators and boosters stay adjacent.
    """
    pos, neg = 1, -1
    for i, token in enumerate(tokens):
        base = lexicon.term_strengths.get(token)
        if base is None:
            continue
        strength = base
        if i >= 1 and tokens[i - 1] in lexicon.boosters:
            magnitude = abs(strength) + lexicon.boosters[tokens[i - 1]]
            magnitude = max(1, min(5, magnitude))
            strength = magnitude if strength > 0 else -magnitude
        if any(t in lexicon.negators for t in tokens[max(0, i - 2):i]):
            magnitude = math.ceil(abs(strength) / 2)
            strength = -magnitude if strength > 0 else magnitude
        if strength > 0:
            pos = max(pos, strength)
        else:
            neg = min(neg, strength)
    return pos, neg


def score_document(doc: Document, lexicon: Lexicon) -> SentimentScore:
    """Sentence-wise scoring of title plus article, aggregated by max/min."""
    text = f"{doc.title} {doc.article}"
    pos, neg = 1, -1
    for sentence in _SENTENCE_SPLIT.split(text):
        tokens = pipeline(sentence, SENTIMENT_CONFIG)
        if not tokens:
            continue
        s_pos, s_neg = score_sentence(tokens, lexicon)
        pos = max(pos, s_pos)
        neg = min(neg, s_neg)
    return SentimentScore(positive=pos, negative=neg)


@dataclass(frozen=True)
class PolarityReport:
    counts: dict[str, int]
    mean_polarity: float | None
    median_polarity: float | None

    def to_dict(self) -> dict:
        return {
            "counts": dict(self.counts),
            "mean_polarity": self.mean_polarity,
            "median_polarity": self.median_polarity,
        }


def corpus_polarity_report(corpus: Corpus, lexicon: Lexicon) -> PolarityReport:
    counts = {cls: 0 for cls in CLASSES}
    polarities: list[float] = []
    for doc in corpus:
        score = score_document(doc, lexicon)
        counts[score.polarity_class] += 1
        polarities.append(score.polarity)
    if not polarities:
        return PolarityReport(counts, None, None)
    return PolarityReport(counts, statistics.mean(polarities), statistics.median(polarities))


def _parse_strength(value: str, lineno: int, path) -> int:
    try:
        return int(value)
    except ValueError:
        raise LexiconError(f"{path}:{lineno}: strength {value!r} is not an integer") from None


def load_lexicon(path: str | Path) -> Lexicon:
    """Parse a lexicon TSV: term strengths, then #boosters and #negators sections."""
    term_strengths: dict[str, int] = {}
    boosters: dict[str, int] = {}
    negators: set[str] = set()
    section = "strengths"
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            if line in ("#boosters", "#negators"):
                section = line[1:]
                continue
            if line.startswith("#"):
                continue
            parts = line.split("\t")
            token = parts[0].strip()
            if not token:
                raise LexiconError(f"{path}:{lineno}: empty token")
            if pipeline(token, SENTIMENT_CONFIG) != [token]:
                raise LexiconError(
                    f"{path}:{lineno}: token {token!r} is not a normalized single word"
                )
            if token in term_strengths or token in boosters or token in negators:
                raise LexiconError(f"{path}:{lineno}: duplicate token {token!r}")
            if section == "negators":
                if len(parts) != 1:
                    raise LexiconError(f"{path}:{lineno}: negator lines carry no strength")
                negators.add(token)
                continue
            if len(parts) != 2:
                raise LexiconError(f"{path}:{lineno}: expected token<TAB>strength")
            strength = _parse_strength(parts[1].strip(), lineno, path)
            if section == "boosters":
                if strength not in _BOOSTER_VALUES:
                    raise LexiconError(
                        f"{path}:{lineno}: booster strength must be one of "
                        f"{_BOOSTER_VALUES}, got {strength}"
                    )
                boosters[token] = strength
            else:
                if not (1 <= strength <= 5 or -5 <= strength <= -1):
                    raise LexiconError(
                        f"{path}:{lineno}: strength must be in [-5,-1] or [1,5], got {strength}"
                    )
                term_strengths[token] = strength
    return Lexicon(term_strengths, boosters, frozenset(negators))


def starter_lexicon_path() -> Path:
    """Path of the bundled 40-word starter lexicon."""
    return Path(__file__).parent / "data" / "starter_lexicon.tsv"
