"""Politeness-limited page fetching and HTML article extraction.

Fetching is sequential by design: the interval between two fetch starts is
the whole defense against getting the crawler's IP blocked. The actual
page fetch is a capability (any ``url -> html`` callable) so tests run
against local fixture files and never touch the network.

Extraction keeps the text of ``p`` and ``em`` elements in document order;
``div``/``span`` and all other markup disappear as tags. The page title
comes from ``<title>`` (fallback ``<h1>``); a missing title aborts the
page, everything else falls back (label "Unlabeled", date of fetch).
"""

from __future__ import annotations

import logging
import time
import urllib.parse
import urllib.request
from dataclasses import dataclass
from datetime import date, datetime, timezone
from html.parser import HTMLParser
from pathlib import Path
from typing import Callable, Iterator

from .corpus_store import Document

log = logging.getLogger(__name__)

Fetcher = Callable[[str], str]


class CrawlError(Exception):
    """Invalid crawl configuration."""


class ExtractionError(Exception):
    """Page could not be turned into a document candidate."""


@dataclass(frozen=True)
class CrawlConfig:
    seeds: tuple[str, ...]
    fetch_interval: float = 0.0
    output_path: Path | None = None
    start_time: float | None = None
    end_time: float | None = None

    def __post_init__(self) -> None:
        if self.fetch_interval < 0:
            raise CrawlError(f"fetch_interval must be >= 0, got {self.fetch_interval}")
        if (
            self.start_time is not None
            and self.end_time is not None
            and self.start_time > self.end_time
        ):
            raise CrawlError("start_time is after end_time")


@dataclass(frozen=True)
class RawPage:
    url: str
    html: str
    fetched_at: float


@dataclass(frozen=True)
class FetchFailure:
    url: str
    error: str


def fetch_all(
    config: CrawlConfig,
    fetcher: Fetcher,
    clock: Callable[[], float] = time.time,
    sleep: Callable[[float], None] = time.sleep,
    failures: list[FetchFailure] | None = None,
) -> Iterator[RawPage]:
    """Fetch seeds in order, spacing fetch starts by >= fetch_interval.

    A failing URL is recorded (appended to ``failures`` when given, and
    logged) and the crawl continues. Stops early once end_time is reached.
    """
    if config.start_time is not None:
        wait = config.start_time - clock()
        if wait > 0:
            sleep(wait)
    last_start: float | None = None
    for url in config.seeds:
        if last_start is not None and config.fetch_interval > 0:
            wait = last_start + config.fetch_interval - clock()
            if wait > 0:
                sleep(wait)
        now = clock()
        if config.end_time is not None and now >= config.end_time:
            log.info("crawl stopped at end_time with seeds remaining")
            return
        last_start = now
        try:
            html = fetcher(url)
        except Exception as exc:
            log.warning("fetch failed for %s: %s", url, exc)
            if failures is not None:
                failures.append(FetchFailure(url=url, error=str(exc)))
            continue
        yield RawPage(url=url, html=html, fetched_at=now)


@dataclass(frozen=True)
class ExtractionSelectors:
    """Where label and date come from; both fall back when absent."""

    label_meta: str = "category"
    dt_meta: str = "date"
    label_fallback: str = "Unlabeled"


DEFAULT_SELECTORS = ExtractionSelectors()


@dataclass(frozen=True)
class DocumentCandidate:
    """A document missing only its id; staging assigns ids sequentially."""

    label: str
    url: str
    title: str
    dt: str
    article: str


class _ArticleExtractor(HTMLParser):
    """Tag-soup tolerant collector of title, h1, meta values, and p/em text."""

    def __init__(self) -> None:
        super().__init__(convert_charrefs=True)
        self.in_title = 0
        self.in_h1 = 0
        self.p_depth = 0
        self.em_depth = 0
        self.title_chunks: list[str] = []
        self.h1_chunks: list[str] = []
        self.article_chunks: list[str] = []
        self.meta: dict[str, str] = {}

    def _boundary(self, tag: str) -> None:
        # p elements separate with a space; em is inline inside a paragraph
        # (no break around it) but acts as its own block outside one.
        if tag == "p" or (tag == "em" and self.p_depth == 0):
            self.article_chunks.append("\n")

    def handle_starttag(self, tag: str, attrs) -> None:
        if tag == "title":
            self.in_title += 1
        elif tag == "h1":
            self.in_h1 += 1
        elif tag == "p":
            self._boundary(tag)
            self.p_depth += 1
        elif tag == "em":
            self._boundary(tag)
            self.em_depth += 1
        elif tag == "meta":
            attr_map = dict(attrs)
            name, content = attr_map.get("name"), attr_map.get("content")
            if name and content is not None and name not in self.meta:
                self.meta[name] = content

    def handle_endtag(self, tag: str) -> None:
        if tag == "title":
            self.in_title = max(0, self.in_title - 1)
        elif tag == "h1":
            self.in_h1 = max(0, self.in_h1 - 1)
        elif tag == "p":
            self.p_depth = max(0, self.p_depth - 1)
            self._boundary(tag)
        elif tag == "em":
            self.em_depth = max(0, self.em_depth - 1)
            self._boundary(tag)

    def handle_data(self, data: str) -> None:
        if self.in_title:
            self.title_chunks.append(data)
        if self.in_h1:
            self.h1_chunks.append(data)
        if self.p_depth or self.em_depth:
            self.article_chunks.append(data)


def _collapse(chunks: list[str]) -> str:
    return " ".join("".join(chunks).split())


def extract_document(
    page: RawPage, selectors: ExtractionSelectors = DEFAULT_SELECTORS
) -> DocumentCandidate:
    """Deterministic candidate extraction; only a missing title aborts."""
    parser = _ArticleExtractor()
    parser.feed(page.html)
    parser.close()
    title = _collapse(parser.title_chunks) or _collapse(parser.h1_chunks)
    if not title:
        raise ExtractionError(f"no extractable title in {page.url}")
    label = parser.meta.get(selectors.label_meta, "").strip() or selectors.label_fallback
    dt = parser.meta.get(selectors.dt_meta, "").strip()
    if dt:
        try:
            date.fromisoformat(dt)
        except ValueError:
            log.warning("%s: ignoring unparseable date %r", page.url, dt)
            dt = ""
    if not dt:
        dt = datetime.fromtimestamp(page.fetched_at, tz=timezone.utc).date().isoformat()
    return DocumentCandidate(
        label=label,
        url=page.url,
        title=title,
        dt=dt,
        article=_collapse(parser.article_chunks),
    )


def stage_documents(candidates, out: str | Path) -> int:
    """Write candidates as a loadable JSONL corpus, ids assigned from 1."""
    import json

    count = 0
    with open(out, "w", encoding="utf-8") as fh:
        for candidate in candidates:
            count += 1
            doc = Document(
                id=count,
                label=candidate.label,
                url=candidate.url,
                title=candidate.title,
                dt=candidate.dt,
                article=candidate.article,
            )
            fh.write(json.dumps(doc.to_dict(), ensure_ascii=False))
            fh.write("\n")
    return count


def read_seeds(path: str | Path) -> tuple[str, ...]:
    """Seed file: one URL per line, blank lines and # comments skipped."""
    seeds = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line and not line.startswith("#"):
                seeds.append(line)
    return tuple(seeds)


def fixture_fetcher(directory: str | Path) -> Fetcher:
    """Resolve URLs to files in a directory (URL percent-encoded as filename)."""
    directory = Path(directory)

    def fetch(url: str) -> str:
        name = urllib.parse.quote(url, safe="")
        return (directory / name).read_text(encoding="utf-8")

    return fetch


def http_fetcher(timeout: float = 30.0) -> Fetcher:
    def fetch(url: str) -> str:
        with urllib.request.urlopen(url, timeout=timeout) as response:
            charset = response.headers.get_content_charset() or "utf-8"
            return response.read().decode(charset, errors="replace")

    return fetch
