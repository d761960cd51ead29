"""Search and content providers: local fixtures, live HTTP bindings, replay.

Two small protocols decouple the pipeline from any particular backend:

* ``SearchProvider.search(query, k)`` returns ranked SearchResults.
* ``ContentProvider.get_page(page_id)`` returns the raw page payload.

``FixtureProvider`` implements both over a directory of JSON files and is the
default for tests and offline use. The live bindings speak a web-search JSON
API and a wiki REST API through an injectable httpx transport, so every HTTP
interaction can be recorded to and replayed from a cassette file.
"""

from __future__ import annotations

import json
import os
import threading
import time
import urllib.parse
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Protocol, runtime_checkable

import httpx

from claimcheck.errors import (
    ContentNotFoundError,
    InvalidConfigError,
    InvalidInputError,
    ProviderError,
)
from claimcheck.model.encoding import normalize_token
from claimcheck.retrieval.query import Query

MAX_RESULTS = 10
DEFAULT_K = 3

SEARCH_ENDPOINT = "https://www.googleapis.com/customsearch/v1"
WIKI_ENDPOINT = "https://en.wikipedia.org/w/api.php"


@dataclass(frozen=True)
class SearchResult:
    rank: int
    title: str
    url: str
    page_id: str

    def __post_init__(self):
        if self.rank < 1:
            raise InvalidInputError(f"rank must be positive, got {self.rank}")


@dataclass(frozen=True)
class RawPage:
    """Unsegmented page payload as a content provider returns it."""

    page_id: str
    title: str
    text: str


@runtime_checkable
class SearchProvider(Protocol):
    def search(self, query: Query, k: int) -> list[SearchResult]: ...


@runtime_checkable
class ContentProvider(Protocol):
    def get_page(self, page_id: str) -> RawPage: ...


def search(query: Query, k: int, provider: SearchProvider) -> list[SearchResult]:
    """Run a provider search, capped at k results in provider rank order."""
    if not 1 <= k <= MAX_RESULTS:
        raise InvalidInputError(f"k must be in [1, {MAX_RESULTS}], got {k}")
    results = list(provider.search(query, k))[:k]
    for i, result in enumerate(results, start=1):
        if result.rank != i:
            raise ProviderError(
                f"provider ranks not contiguous from 1: got {result.rank} at position {i}",
                retryable=False,
            )
    return results


class FixtureProvider:
    """Deterministic search and content over a directory of JSON pages.

    Each ``*.json`` file holds one page: ``{"page_id", "title", "text"}``.
    Search scores a page by the total occurrences of the query's words in the
    page title and text (normalized word match) and ranks by descending score,
    ties broken by page_id; zero-score pages are excluded.
    """

    def __init__(self, root: str | Path):
        self.root = Path(root)
        if not self.root.is_dir():
            raise InvalidConfigError(f"fixture directory not found: {self.root}")
        self._pages: dict[str, RawPage] = {}
        self._word_counts: dict[str, Counter] = {}
        for path in sorted(self.root.glob("*.json")):
            data = json.loads(path.read_text(encoding="utf-8"))
            try:
                page = RawPage(str(data["page_id"]), str(data["title"]), str(data["text"]))
            except KeyError as exc:
                raise InvalidConfigError(f"fixture {path.name} is missing field {exc}") from exc
            if page.page_id in self._pages:
                raise InvalidConfigError(f"duplicate fixture page_id {page.page_id!r}")
            self._pages[page.page_id] = page
            words = (page.title + " " + page.text).split()
            self._word_counts[page.page_id] = Counter(normalize_token(w) for w in words)

    def search(self, query: Query, k: int) -> list[SearchResult]:
        terms = [normalize_token(t) for t in query.normalized.split()]
        scored = []
        for page_id, counts in self._word_counts.items():
            score = sum(counts[t] for t in terms)
            if score > 0:
                scored.append((-score, page_id))
        scored.sort()
        results = []
        for rank, (_, page_id) in enumerate(scored[:k], start=1):
            page = self._pages[page_id]
            results.append(
                SearchResult(
                    rank=rank,
                    title=page.title,
                    url=f"fixture://{page_id}",
                    page_id=page_id,
                )
            )
        return results

    def get_page(self, page_id: str) -> RawPage:
        try:
            return self._pages[page_id]
        except KeyError:
            raise ContentNotFoundError(f"no fixture page with id {page_id!r}") from None


class RateLimiter:
    """Thread-safe requests-per-second cap via minimum spacing between calls."""

    def __init__(self, per_second: float, clock=time.monotonic, sleep=time.sleep):
        if per_second <= 0:
            raise InvalidConfigError(f"rate must be positive, got {per_second}")
        self.interval = 1.0 / per_second
        self._clock = clock
        self._sleep = sleep
        self._lock = threading.Lock()
        self._next_at = 0.0

    def wait(self) -> None:
        with self._lock:
            now = self._clock()
            delay = self._next_at - now
            if delay > 0:
                self._sleep(delay)
                now = self._next_at
            self._next_at = now + self.interval


class ReplayTransport(httpx.BaseTransport):
    """Serves recorded responses from a cassette, in order of first match.

    A cassette is a JSON list of ``{"method", "url", "status", "body"}``
    entries; ``body`` is the decoded JSON payload. Requests are matched on
    method plus URL (query string included, order-insensitive).
    """

    def __init__(self, cassette: str | Path):
        entries = json.loads(Path(cassette).read_text(encoding="utf-8"))
        self._entries = [(e["method"].upper(), _canonical(e["url"]), e) for e in entries]

    def handle_request(self, request: httpx.Request) -> httpx.Response:
        wanted = (request.method.upper(), _canonical(str(request.url)))
        for i, (method, url, entry) in enumerate(self._entries):
            if (method, url) == wanted:
                del self._entries[i]
                return httpx.Response(entry["status"], json=entry["body"])
        raise AssertionError(f"no recorded response for {wanted[0]} {wanted[1]}")


class RecordingTransport(httpx.BaseTransport):
    """Wraps a real transport and appends each exchange to a cassette file."""

    def __init__(self, inner: httpx.BaseTransport, cassette: str | Path):
        self.inner = inner
        self.cassette = Path(cassette)

    def handle_request(self, request: httpx.Request) -> httpx.Response:
        response = self.inner.handle_request(request)
        response.read()
        entries = []
        if self.cassette.exists():
            entries = json.loads(self.cassette.read_text(encoding="utf-8"))
        entries.append(
            {
                "method": request.method,
                "url": str(request.url),
                "status": response.status_code,
                "body": json.loads(response.content),
            }
        )
        self.cassette.write_text(json.dumps(entries, indent=2), encoding="utf-8")
        return response


def _canonical(url: str) -> str:
    # sort the query string so dict ordering never breaks replay matching
    parts = urllib.parse.urlsplit(url)
    pairs = sorted(urllib.parse.parse_qsl(parts.query))
    return urllib.parse.urlunsplit(parts._replace(query=urllib.parse.urlencode(pairs)))


def _request_json(client: httpx.Client, url: str, params: dict, limiter: RateLimiter | None):
    if limiter is not None:
        limiter.wait()
    try:
        response = client.get(url, params=params)
    except httpx.TransportError as exc:
        raise ProviderError(f"transport failure: {exc}", retryable=True) from exc
    if response.status_code >= 500:
        raise ProviderError(f"provider returned {response.status_code}", retryable=True)
    if response.status_code >= 400:
        raise ProviderError(f"provider rejected request: {response.status_code}", retryable=False)
    try:
        return response.json()
    except ValueError as exc:
        raise ProviderError(f"provider sent malformed JSON: {exc}", retryable=False) from exc


class WebSearchProvider:
    """Live web-search JSON API binding (key + engine id authenticated)."""

    def __init__(
        self,
        api_key: str,
        engine_id: str,
        *,
        endpoint: str = SEARCH_ENDPOINT,
        transport: httpx.BaseTransport | None = None,
        requests_per_second: float = 5.0,
    ):
        if not api_key or not engine_id:
            raise InvalidConfigError("search API key and engine id are required")
        self.api_key = api_key
        self.engine_id = engine_id
        self.endpoint = endpoint
        self.limiter = RateLimiter(requests_per_second)
        self._client = httpx.Client(transport=transport, timeout=10.0)

    @classmethod
    def from_env(cls, **kwargs) -> "WebSearchProvider":
        key = os.environ.get("SEARCH_API_KEY", "")
        engine = os.environ.get("SEARCH_ENGINE_ID", "")
        if not key or not engine:
            raise InvalidConfigError(
                "SEARCH_API_KEY and SEARCH_ENGINE_ID must be set for the live provider"
            )
        return cls(key, engine, **kwargs)

    def search(self, query: Query, k: int) -> list[SearchResult]:
        params = {
            "key": self.api_key,
            "cx": self.engine_id,
            "q": query.normalized,
            "num": min(k, MAX_RESULTS),
        }
        payload = _request_json(self._client, self.endpoint, params, self.limiter)
        results = []
        for rank, item in enumerate(payload.get("items", [])[:k], start=1):
            url = item.get("link", "")
            results.append(
                SearchResult(
                    rank=rank,
                    title=item.get("title", ""),
                    url=url,
                    page_id=_page_id_from_url(url),
                )
            )
        return results


def _page_id_from_url(url: str) -> str:
    path = urllib.parse.urlsplit(url).path
    return urllib.parse.unquote(path.rstrip("/").rsplit("/", 1)[-1])


class WikiContentProvider:
    """Live wiki REST binding returning plain-text page extracts."""

    def __init__(
        self,
        *,
        endpoint: str = WIKI_ENDPOINT,
        transport: httpx.BaseTransport | None = None,
        requests_per_second: float = 5.0,
    ):
        self.endpoint = endpoint
        self.limiter = RateLimiter(requests_per_second)
        self._client = httpx.Client(transport=transport, timeout=10.0)

    def get_page(self, page_id: str) -> RawPage:
        params = {
            "action": "query",
            "prop": "extracts",
            "explaintext": 1,
            "redirects": 1,
            "format": "json",
            "titles": page_id,
        }
        payload = _request_json(self._client, self.endpoint, params, self.limiter)
        pages: Iterable[dict] = payload.get("query", {}).get("pages", {}).values()
        for page in pages:
            if "missing" in page:
                break
            return RawPage(
                page_id=page_id,
                title=page.get("title", page_id),
                text=page.get("extract", ""),
            )
        raise ContentNotFoundError(f"wiki page not found: {page_id!r}")
