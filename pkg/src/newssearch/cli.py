"""Command line interface: crawl, pipeline, index, search, serve, sentiment, related, eval."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import crawler, evaluation, similarity
from .corpus_store import load_corpus
from .inverted_index import build_index, load_index, save_index
from .ranking import RankingParams
from .search_service import (
    EmptyQueryError,
    Query,
    ServicePaths,
    Snapshot,
    create_app,
    search,
)
from .sentiment import (
    corpus_polarity_report,
    load_lexicon,
    score_document,
    starter_lexicon_path,
)
from .text_pipeline import PipelineConfig, pipeline


def _cmd_crawl(args: argparse.Namespace) -> int:
    config = crawler.CrawlConfig(
        seeds=crawler.read_seeds(args.seeds),
        fetch_interval=args.interval_ms / 1000.0,
        start_time=args.start,
        end_time=args.end,
    )
    fetch = (
        crawler.fixture_fetcher(args.fixture_dir)
        if args.fixture_dir
        else crawler.http_fetcher()
    )
    failures: list[crawler.FetchFailure] = []

    def candidates():
        for page in crawler.fetch_all(config, fetch, failures=failures):
            try:
                yield crawler.extract_document(page)
            except crawler.ExtractionError as exc:
                print(f"skipped: {exc}", file=sys.stderr)

    count = crawler.stage_documents(candidates(), args.out)
    print(f"staged {count} documents to {args.out} ({len(failures)} fetch failures)")
    return 0


def _cmd_pipeline(args: argparse.Namespace) -> int:
    config = PipelineConfig(stemming_enabled=args.stem)
    for token in pipeline(args.text, config):
        print(token)
    return 0


def _cmd_index(args: argparse.Namespace) -> int:
    corpus = load_corpus(args.corpus)
    config = PipelineConfig(stemming_enabled=args.stem)
    fields = tuple(f.strip() for f in args.fields.split(",") if f.strip())
    index = build_index(corpus, config, fields)
    save_index(index, args.out)
    stats = index.stats
    print(
        f"indexed {stats.n_docs} docs, {stats.n_terms} terms, "
        f"avg_doc_len {stats.avg_doc_len:.2f} -> {args.out}"
    )
    return 0


def _load_snapshot(args: argparse.Namespace) -> Snapshot:
    return Snapshot(
        corpus=load_corpus(args.corpus),
        index=load_index(args.index),
        lexicon=load_lexicon(args.lexicon),
    )


def _cmd_search(args: argparse.Namespace) -> int:
    snapshot = _load_snapshot(args)
    try:
        query = Query(
            text=args.text,
            category=args.category,
            limit=args.top,
            ranker=args.ranker,
            params=RankingParams(k1=args.k1, b=args.b),
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        response = search(query, snapshot)
    except EmptyQueryError:
        print("error: query contains no searchable terms", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(response.to_dict(), ensure_ascii=False, indent=2))
        return 0
    if response.category_unknown:
        print(f"unknown category: {args.category}")
        return 0
    for result in response.results:
        subs = result.fuzzy_substitutions
        if subs:
            shown = ", ".join(f"{a} -> {b}" for a, b in subs.items())
            print(f"(showing results for: {shown})")
            break
    for i, result in enumerate(response.results, start=1):
        sent = result.sentiment
        print(
            f"{i:2d}. [{result.score:8.4f}] {result.title}  "
            f"({result.label}, {result.dt})  "
            f"sentiment={sent.polarity_class} polarity={sent.polarity:+.2f}"
        )
    print(f"{len(response.results)} shown of {response.total_candidates} candidates")
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    app = create_app(
        ServicePaths(corpus=Path(args.corpus), index=Path(args.index), lexicon=Path(args.lexicon))
    )
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def _cmd_sentiment(args: argparse.Namespace) -> int:
    corpus = load_corpus(args.corpus)
    lexicon = load_lexicon(args.lexicon)
    if args.id is not None:
        doc = corpus.get(args.id)
        if doc is None:
            print(f"error: no document with id {args.id}", file=sys.stderr)
            return 2
        print(json.dumps(score_document(doc, lexicon).to_dict(), indent=2))
        return 0
    report = corpus_polarity_report(corpus, lexicon)
    print(json.dumps(report.to_dict(), indent=2))
    return 0


def _cmd_related(args: argparse.Namespace) -> int:
    index = load_index(args.index)
    for doc_id, sim in similarity.related(args.id, args.k, index):
        print(f"{doc_id}\t{sim:.6f}")
    return 0


def _cmd_eval(args: argparse.Namespace) -> int:
    qrels = evaluation.load_qrels(args.qrels, args.queries)
    run = evaluation.load_run(args.run)
    if args.compare:
        other = evaluation.load_run(args.compare)
        comparison = evaluation.compare_runs(qrels, run, other)
        if args.json:
            print(json.dumps(comparison.to_dict(), indent=2))
        else:
            print(comparison.as_table())
        return 0
    report = evaluation.evaluate_run(qrels, run)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
        return 0
    for q in report.per_query:
        p = "-" if q.precision is None else f"{q.precision:.1f}"
        r = "-" if q.recall is None else f"{q.recall:.1f}"
        print(f"{q.query_id}\tRN={q.rn}\tTRN={q.trn}\tTNS={q.tns}\tP={p}\tR={r}")
    mp = "-" if report.macro_precision is None else f"{report.macro_precision:.1f}"
    mr = "-" if report.macro_recall is None else f"{report.macro_recall:.1f}"
    print(f"macro\tP={mp}\tR={mr}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="newssearch")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("crawl", help="fetch seed pages and stage a JSONL corpus")
    p.add_argument("--seeds", required=True, help="file with one URL per line")
    p.add_argument("--out", required=True, help="output corpus JSONL path")
    p.add_argument("--interval-ms", type=int, default=1000)
    p.add_argument("--start", type=float, default=None, help="POSIX timestamp")
    p.add_argument("--end", type=float, default=None, help="POSIX timestamp")
    p.add_argument("--fixture-dir", default=None, help="serve URLs from local files")
    p.set_defaults(func=_cmd_crawl)

    p = sub.add_parser("pipeline", help="print the normalized tokens of a text")
    p.add_argument("--text", required=True)
    p.add_argument("--stem", action="store_true")
    p.set_defaults(func=_cmd_pipeline)

    p = sub.add_parser("index", help="build and persist the inverted index")
    p.add_argument("--corpus", required=True)
    p.add_argument("--out", required=True, help="index directory")
    p.add_argument("--stem", action="store_true")
    p.add_argument("--fields", default="title,article")
    p.set_defaults(func=_cmd_index)

    p = sub.add_parser("search", help="run one query against a built index")
    p.add_argument("text")
    p.add_argument("--index", required=True)
    p.add_argument("--corpus", required=True)
    p.add_argument("--lexicon", default=str(starter_lexicon_path()))
    p.add_argument("--category", default=None)
    p.add_argument("--top", type=int, default=10)
    p.add_argument("--ranker", choices=["bm25", "tfidf"], default="bm25")
    p.add_argument("--k1", type=float, default=1.2)
    p.add_argument("--b", type=float, default=0.75)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("serve", help="run the HTTP JSON API")
    p.add_argument("--port", type=int, required=True)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--index", required=True)
    p.add_argument("--corpus", required=True)
    p.add_argument("--lexicon", default=str(starter_lexicon_path()))
    p.set_defaults(func=_cmd_serve)

    p = sub.add_parser("sentiment", help="score one document or report the corpus")
    p.add_argument("--corpus", required=True)
    p.add_argument("--lexicon", default=str(starter_lexicon_path()))
    p.add_argument("--id", type=int, default=None)
    p.set_defaults(func=_cmd_sentiment)

    p = sub.add_parser("related", help="most similar documents to one document")
    p.add_argument("--id", type=int, required=True)
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--index", required=True)
    p.set_defaults(func=_cmd_related)

    p = sub.add_parser("eval", help="precision/recall of a run, optionally vs another")
    p.add_argument("--qrels", required=True)
    p.add_argument("--queries", default=None)
    p.add_argument("--run", required=True)
    p.add_argument("--compare", default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_eval)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
