"""Sentiment-aware, category-classified full-text search over a news corpus.

Subpackages cover the full flow: crawl pages into a JSONL corpus, build a
persisted inverted index, rank matches with BM25, attach lexicon sentiment
scores, and evaluate classified vs. plain retrieval with precision/recall.
"""

__version__ = "0.1.0"
