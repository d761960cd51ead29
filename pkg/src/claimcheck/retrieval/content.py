"""Content fetch: segmentation at fetch time, TTL caching, single flight."""

from __future__ import annotations

import threading
import time
from dataclasses import dataclass

from claimcheck.errors import ContentNotFoundError
from claimcheck.retrieval.providers import ContentProvider, SearchResult
from claimcheck.retrieval.segment import segment_sentences


@dataclass(frozen=True)
class DocumentContent:
    """A fetched page, segmented once so windows stay stable across calls."""

    page_id: str
    title: str
    sentences: tuple[str, ...]
    fetched_at: float


class ContentCache:
    """TTL cache of DocumentContent with per-page single-flight fetches.

    Concurrent requests for the same page share one provider call; different
    pages fetch independently. A ttl of None caches forever.
    """

    def __init__(self, ttl: float | None = 3600.0, clock=time.monotonic):
        self.ttl = ttl
        self._clock = clock
        self._lock = threading.Lock()
        self._page_locks: dict[str, threading.Lock] = {}
        self._entries: dict[str, tuple[float, DocumentContent]] = {}

    def _lock_for(self, page_id: str) -> threading.Lock:
        with self._lock:
            return self._page_locks.setdefault(page_id, threading.Lock())

    def _fresh(self, page_id: str) -> DocumentContent | None:
        with self._lock:
            entry = self._entries.get(page_id)
        if entry is None:
            return None
        stored_at, content = entry
        if self.ttl is not None and self._clock() - stored_at >= self.ttl:
            return None
        return content

    def get_or_fetch(self, page_id: str, loader) -> DocumentContent:
        cached = self._fresh(page_id)
        if cached is not None:
            return cached
        with self._lock_for(page_id):
            cached = self._fresh(page_id)  # another thread may have won the race
            if cached is not None:
                return cached
            content = loader(page_id)
            with self._lock:
                self._entries[page_id] = (self._clock(), content)
            return content


def _load(page_id: str, provider: ContentProvider) -> DocumentContent:
    page = provider.get_page(page_id)
    sentences = segment_sentences(page.text)
    if not sentences:
        raise ContentNotFoundError(f"page {page_id!r} has no extractable text")
    return DocumentContent(
        page_id=page.page_id,
        title=page.title,
        sentences=tuple(sentences),
        fetched_at=time.time(),
    )


def fetch_content(
    result: SearchResult | str,
    provider: ContentProvider,
    cache: ContentCache | None = None,
) -> DocumentContent:
    """Fetch and segment one page, by SearchResult or bare page_id."""
    page_id = result.page_id if isinstance(result, SearchResult) else result
    if cache is None:
        return _load(page_id, provider)
    return cache.get_or_fetch(page_id, lambda pid: _load(pid, provider))
