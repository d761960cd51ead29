"""Wiring: build providers, stores, checker, and app from an ApiConfig."""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI

from claimcheck.api.app import create_app
from claimcheck.api.config import ApiConfig
from claimcheck.feedback.store import FeedbackStore
from claimcheck.model.pipeline import TwoPhaseModel
from claimcheck.retrieval.content import ContentCache
from claimcheck.retrieval.providers import (
    FixtureProvider,
    WebSearchProvider,
    WikiContentProvider,
)
from claimcheck.service.checker import ClaimChecker
from claimcheck.service.sessions import SessionStore


def build_runtime(config: ApiConfig) -> tuple[ClaimChecker, FeedbackStore]:
    model = TwoPhaseModel.load(config.checkpoint)

    if config.provider == "fixture":
        fixtures = FixtureProvider(config.fixture_dir)
        search_provider, content_provider = fixtures, fixtures
    else:
        search_provider = WebSearchProvider.from_env(
            requests_per_second=config.requests_per_second
        )
        content_provider = WikiContentProvider(
            requests_per_second=config.requests_per_second
        )

    if config.store_dir is not None:
        store_dir = Path(config.store_dir)
        sessions = SessionStore(store_dir / "sessions.jsonl")
        feedback = FeedbackStore(store_dir / "feedback.jsonl", sessions)
    else:
        sessions = SessionStore()
        feedback = FeedbackStore(None, sessions)

    checker = ClaimChecker(
        model,
        search_provider,
        content_provider,
        sessions,
        k=config.k,
        window_size=config.window_size,
        context=config.context,
        cache=ContentCache(ttl=config.cache_ttl),
    )
    return checker, feedback


def build_app(config: ApiConfig) -> FastAPI:
    checker, feedback = build_runtime(config)
    return create_app(checker, feedback)
