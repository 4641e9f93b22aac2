"""Precision/recall evaluation of search runs against relevance judgments.

    P = RN / TRN * 100      (RN relevant retrieved, TRN total retrieved)
    R = RN / TNS * 100      (TNS total relevant)

Retrieval counts use set semantics (duplicates in a run collapse). Zero
denominators yield an absent value, never 0 or 100, so averages are not
silently biased. Macro averages run over the queries where the metric is
defined.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Sequence

from .corpus_store import Corpus


class EvaluationError(Exception):
    """Malformed judgments, runs, or mismatched inputs."""


def precision(rn: int, trn: int) -> float:
    if trn < 1:
        raise EvaluationError("precision undefined: no documents retrieved (TRN = 0)")
    if not 0 <= rn <= trn:
        raise EvaluationError(f"RN {rn} out of range for TRN {trn}")
    return rn / trn * 100.0


def recall(rn: int, tns: int) -> float:
    if tns < 1:
        raise EvaluationError("recall undefined: no relevant documents (TNS = 0)")
    if not 0 <= rn <= tns:
        raise EvaluationError(f"RN {rn} out of range for TNS {tns}")
    return rn / tns * 100.0


@dataclass(frozen=True)
class Qrels:
    """Binary relevance judgments plus the query texts they belong to."""

    judgments: Mapping[tuple[str, int], int]
    query_texts: Mapping[str, tuple[str, str | None]]

    def query_ids(self) -> set[str]:
        return {qid for qid, _ in self.judgments}

    def relevant(self, query_id: str) -> set[int]:
        return {doc for (qid, doc), rel in self.judgments.items() if qid == query_id and rel == 1}


@dataclass(frozen=True)
class QueryEval:
    query_id: str
    rn: int
    trn: int
    tns: int
    precision: float | None
    recall: float | None


@dataclass(frozen=True)
class EvalReport:
    per_query: tuple[QueryEval, ...]
    macro_precision: float | None
    macro_recall: float | None

    def by_query(self) -> dict[str, QueryEval]:
        return {q.query_id: q for q in self.per_query}

    def to_dict(self) -> dict:
        return {
            "queries": [
                {
                    "query_id": q.query_id,
                    "rn": q.rn,
                    "trn": q.trn,
                    "tns": q.tns,
                    "precision": q.precision,
                    "recall": q.recall,
                }
                for q in self.per_query
            ],
            "macro_precision": self.macro_precision,
            "macro_recall": self.macro_recall,
        }


def _macro(values: list[float]) -> float | None:
    return sum(values) / len(values) if values else None


def evaluate_run(qrels: Qrels, run: Mapping[str, Sequence[int]]) -> EvalReport:
    """Per-query RN/TRN/TNS counts and percentages for a retrieval run."""
    judged = qrels.query_ids()
    unknown = set(run) - judged
    if unknown:
        raise EvaluationError(f"run references unjudged queries: {sorted(unknown)}")
    per_query = []
    for query_id in sorted(run):
        retrieved = set(run[query_id])
        relevant_docs = qrels.relevant(query_id)
        rn = len(retrieved & relevant_docs)
        trn = len(retrieved)
        tns = len(relevant_docs)
        per_query.append(
            QueryEval(
                query_id=query_id,
                rn=rn,
                trn=trn,
                tns=tns,
                precision=precision(rn, trn) if trn else None,
                recall=recall(rn, tns) if tns else None,
            )
        )
    return EvalReport(
        per_query=tuple(per_query),
        macro_precision=_macro([q.precision for q in per_query if q.precision is not None]),
        macro_recall=_macro([q.recall for q in per_query if q.recall is not None]),
    )


@dataclass(frozen=True)
class QueryDelta:
    query_id: str
    a: QueryEval
    b: QueryEval
    delta_precision: float | None
    delta_recall: float | None


@dataclass(frozen=True)
class RunComparison:
    per_query: tuple[QueryDelta, ...]
    report_a: EvalReport
    report_b: EvalReport

    @property
    def macro_delta_precision(self) -> float | None:
        if self.report_a.macro_precision is None or self.report_b.macro_precision is None:
            return None
        return self.report_b.macro_precision - self.report_a.macro_precision

    @property
    def macro_delta_recall(self) -> float | None:
        if self.report_a.macro_recall is None or self.report_b.macro_recall is None:
            return None
        return self.report_b.macro_recall - self.report_a.macro_recall

    def to_dict(self) -> dict:
        return {
            "queries": [
                {
                    "query_id": d.query_id,
                    "precision_a": d.a.precision,
                    "recall_a": d.a.recall,
                    "precision_b": d.b.precision,
                    "recall_b": d.b.recall,
                    "delta_precision": d.delta_precision,
                    "delta_recall": d.delta_recall,
                }
                for d in self.per_query
            ],
            "macro_delta_precision": self.macro_delta_precision,
            "macro_delta_recall": self.macro_delta_recall,
        }

    def as_table(self) -> str:
        def fmt(value: float | None) -> str:
            return "-" if value is None else f"{value:.1f}"

        header = f"{'query':<12} {'P(a)':>7} {'R(a)':>7} {'P(b)':>7} {'R(b)':>7} {'dP':>7} {'dR':>7}"
        lines = [header, "-" * len(header)]
        for d in self.per_query:
            lines.append(
                f"{d.query_id:<12} {fmt(d.a.precision):>7} {fmt(d.a.recall):>7} "
                f"{fmt(d.b.precision):>7} {fmt(d.b.recall):>7} "
                f"{fmt(d.delta_precision):>7} {fmt(d.delta_recall):>7}"
            )
        lines.append(
            f"{'macro':<12} {fmt(self.report_a.macro_precision):>7} {fmt(self.report_a.macro_recall):>7} "
            f"{fmt(self.report_b.macro_precision):>7} {fmt(self.report_b.macro_recall):>7} "
            f"{fmt(self.macro_delta_precision):>7} {fmt(self.macro_delta_recall):>7}"
        )
        return "\n".join(lines)


def compare_runs(
    qrels: Qrels,
    run_a: Mapping[str, Sequence[int]],
    run_b: Mapping[str, Sequence[int]],
) -> RunComparison:
    """Side-by-side P/R of two runs over the same query set (deltas are b - a)."""
    if set(run_a) != set(run_b):
        raise EvaluationError("runs cover different query sets")
    report_a = evaluate_run(qrels, run_a)
    report_b = evaluate_run(qrels, run_b)
    by_a, by_b = report_a.by_query(), report_b.by_query()
    deltas = []
    for query_id in sorted(run_a):
        a, b = by_a[query_id], by_b[query_id]
        deltas.append(
            QueryDelta(
                query_id=query_id,
                a=a,
                b=b,
                delta_precision=None
                if a.precision is None or b.precision is None
                else b.precision - a.precision,
                delta_recall=None
                if a.recall is None or b.recall is None
                else b.recall - a.recall,
            )
        )
    return RunComparison(tuple(deltas), report_a, report_b)


@dataclass(frozen=True)
class ClassMetrics:
    predicted: int
    gold: int
    correct: int
    precision: float | None
    recall: float | None


@dataclass(frozen=True)
class SentimentEval:
    per_class: dict[str, ClassMetrics]
    macro_precision: float | None
    macro_recall: float | None


def evaluate_sentiment(
    gold: Mapping[int, str], predictions: Mapping[int, str]
) -> SentimentEval:
    """Per-class precision/recall of predicted sentiment classes."""
    if set(gold) != set(predictions):
        raise EvaluationError("gold and prediction doc-id sets differ")
    classes = sorted(set(gold.values()) | set(predictions.values()))
    per_class: dict[str, ClassMetrics] = {}
    for cls in classes:
        predicted = sum(1 for c in predictions.values() if c == cls)
        in_gold = sum(1 for c in gold.values() if c == cls)
        correct = sum(1 for doc, c in predictions.items() if c == cls and gold[doc] == cls)
        per_class[cls] = ClassMetrics(
            predicted=predicted,
            gold=in_gold,
            correct=correct,
            precision=correct / predicted * 100.0 if predicted else None,
            recall=correct / in_gold * 100.0 if in_gold else None,
        )
    return SentimentEval(
        per_class=per_class,
        macro_precision=_macro([m.precision for m in per_class.values() if m.precision is not None]),
        macro_recall=_macro([m.recall for m in per_class.values() if m.recall is not None]),
    )


def _split_tsv(line: str, lineno: int, path, expected: str) -> list[str]:
    parts = line.split("\t")
    if not parts or not parts[0]:
        raise EvaluationError(f"{path}:{lineno}: expected {expected}")
    return parts


def load_qrels(
    qrels_path: str | Path,
    queries_path: str | Path | None = None,
    corpus: Corpus | None = None,
) -> Qrels:
    """Read qrels (and optionally queries) TSV; optionally check ids against a corpus."""
    judgments: dict[tuple[str, int], int] = {}
    with open(qrels_path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            parts = _split_tsv(line, lineno, qrels_path, "query_id<TAB>doc_id<TAB>rel")
            if len(parts) != 3:
                raise EvaluationError(f"{qrels_path}:{lineno}: expected 3 columns")
            query_id, doc_raw, rel_raw = parts
            try:
                doc_id, rel = int(doc_raw), int(rel_raw)
            except ValueError:
                raise EvaluationError(f"{qrels_path}:{lineno}: non-integer doc_id/rel") from None
            if rel not in (0, 1):
                raise EvaluationError(f"{qrels_path}:{lineno}: relevance must be 0 or 1")
            if corpus is not None and corpus.get(doc_id) is None:
                raise EvaluationError(f"{qrels_path}:{lineno}: doc {doc_id} not in corpus")
            judgments[(query_id, doc_id)] = rel
    query_texts: dict[str, tuple[str, str | None]] = {}
    if queries_path is not None:
        with open(queries_path, encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, start=1):
                line = raw.rstrip("\n")
                if not line or line.startswith("#"):
                    continue
                parts = _split_tsv(line, lineno, queries_path, "query_id<TAB>text[<TAB>category]")
                if len(parts) not in (2, 3):
                    raise EvaluationError(f"{queries_path}:{lineno}: expected 2 or 3 columns")
                category = parts[2] if len(parts) == 3 and parts[2] else None
                query_texts[parts[0]] = (parts[1], category)
    return Qrels(judgments, query_texts)


def load_run(path: str | Path) -> dict[str, list[int]]:
    """Read a run TSV (query_id, doc_id, rank) into rank-ordered doc-id lists."""
    rows: dict[str, list[tuple[int, int]]] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            parts = _split_tsv(line, lineno, path, "query_id<TAB>doc_id<TAB>rank")
            if len(parts) != 3:
                raise EvaluationError(f"{path}:{lineno}: expected 3 columns")
            try:
                doc_id, rank_no = int(parts[1]), int(parts[2])
            except ValueError:
                raise EvaluationError(f"{path}:{lineno}: non-integer doc_id/rank") from None
            rows.setdefault(parts[0], []).append((rank_no, doc_id))
    return {qid: [doc for _, doc in sorted(pairs)] for qid, pairs in rows.items()}
