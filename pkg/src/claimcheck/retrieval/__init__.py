"""Claim-to-document retrieval: preprocess, search, fetch, segment, window."""

from claimcheck.retrieval.content import ContentCache, DocumentContent, fetch_content
from claimcheck.retrieval.providers import (
    DEFAULT_K,
    MAX_RESULTS,
    ContentProvider,
    FixtureProvider,
    RateLimiter,
    RawPage,
    RecordingTransport,
    ReplayTransport,
    SearchProvider,
    SearchResult,
    WebSearchProvider,
    WikiContentProvider,
    search,
)
from claimcheck.retrieval.query import Query, preprocess_claim
from claimcheck.retrieval.segment import segment_sentences, tokenize
from claimcheck.retrieval.windows import DEFAULT_WINDOW_SIZE, DocumentWindow, window

__all__ = [
    "ContentCache",
    "ContentProvider",
    "DEFAULT_K",
    "DEFAULT_WINDOW_SIZE",
    "DocumentContent",
    "DocumentWindow",
    "FixtureProvider",
    "MAX_RESULTS",
    "Query",
    "RateLimiter",
    "RawPage",
    "RecordingTransport",
    "ReplayTransport",
    "SearchProvider",
    "SearchResult",
    "WebSearchProvider",
    "WikiContentProvider",
    "fetch_content",
    "preprocess_claim",
    "search",
    "segment_sentences",
    "tokenize",
    "window",
]
