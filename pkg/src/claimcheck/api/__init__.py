"""HTTP API: payload schemas, app factory, configuration, wiring."""

from claimcheck.api.app import create_app
from claimcheck.api.config import ApiConfig
from claimcheck.api.runtime import build_app, build_runtime
from claimcheck.api.schemas import (
    ClaimRequest,
    FeedbackRequest,
    FeedbackResponse,
    SessionPayload,
    SnippetTokenPayload,
    VerdictPayload,
    published_schemas,
)

__all__ = [
    "ApiConfig",
    "ClaimRequest",
    "FeedbackRequest",
    "FeedbackResponse",
    "SessionPayload",
    "SnippetTokenPayload",
    "VerdictPayload",
    "build_app",
    "build_runtime",
    "create_app",
    "published_schemas",
]
