"""Claim-check orchestration: sessions, verdicts, snippets."""

from claimcheck.service.checker import ClaimChecker
from claimcheck.service.sessions import (
    ClaimSession,
    DocumentVerdict,
    SessionStore,
    window_token_view,
)
from claimcheck.service.snippet import (
    DEFAULT_CONTEXT,
    ELLIPSIS,
    SnippetToken,
    build_snippet,
    display_segments,
)

__all__ = [
    "ClaimChecker",
    "ClaimSession",
    "DEFAULT_CONTEXT",
    "DocumentVerdict",
    "ELLIPSIS",
    "SessionStore",
    "SnippetToken",
    "build_snippet",
    "display_segments",
    "window_token_view",
]
