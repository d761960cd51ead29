"""End-to-end claim checking: search, fetch, window, predict, snippet."""

from __future__ import annotations

import logging
import threading
import time
import uuid
from typing import Sequence

from claimcheck.errors import ContentNotFoundError, NoMoreContentError, ProviderError
from claimcheck.retrieval.content import ContentCache, fetch_content
from claimcheck.retrieval.providers import (
    DEFAULT_K,
    ContentProvider,
    SearchProvider,
    search,
)
from claimcheck.retrieval.query import preprocess_claim
from claimcheck.retrieval.segment import tokenize
from claimcheck.retrieval.windows import DEFAULT_WINDOW_SIZE, DocumentWindow, window
from claimcheck.service.sessions import (
    ClaimSession,
    DocumentVerdict,
    SessionStore,
    window_token_view,
)
from claimcheck.service.snippet import DEFAULT_CONTEXT, build_snippet

logger = logging.getLogger(__name__)


class ClaimChecker:
    """Orchestrates claim checks against a trained model and a provider pair.

    The model is used read-only, so concurrent check_claim calls are safe;
    mutations of an existing verdict (show-more) are serialized per verdict.
    """

    def __init__(
        self,
        model,
        search_provider: SearchProvider,
        content_provider: ContentProvider,
        store: SessionStore | None = None,
        *,
        k: int = DEFAULT_K,
        window_size: int = DEFAULT_WINDOW_SIZE,
        context: int = DEFAULT_CONTEXT,
        cache: ContentCache | None = None,
    ):
        self.model = model
        self.search_provider = search_provider
        self.content_provider = content_provider
        self.store = store if store is not None else SessionStore()
        self.default_k = k
        self.window_size = window_size
        self.context = context
        self.cache = cache if cache is not None else ContentCache()
        self._verdict_locks: dict[str, threading.Lock] = {}
        self._locks_guard = threading.Lock()

    def _lock_for(self, verdict_id: str) -> threading.Lock:
        with self._locks_guard:
            return self._verdict_locks.setdefault(verdict_id, threading.Lock())

    def check_claim(self, raw_claim: str, k: int | None = None) -> ClaimSession:
        """Check one claim against the top-k retrieved documents.

        Documents that fail to fetch are skipped and recorded as session
        warnings; zero search hits yield a session with no verdicts.
        """
        query = preprocess_claim(raw_claim)
        results = search(query, k if k is not None else self.default_k, self.search_provider)
        claim_tokens = tokenize(query.normalized)
        session_id = uuid.uuid4().hex

        verdicts: list[DocumentVerdict] = []
        warnings: list[str] = []
        for result in results:
            try:
                content = fetch_content(result, self.content_provider, self.cache)
            except (ContentNotFoundError, ProviderError) as exc:
                message = f"skipped {result.page_id}: {exc}"
                logger.warning(message)
                warnings.append(message)
                continue
            win = window(content, 0, self.window_size)
            verdict_id = f"{session_id}:{result.rank}"
            verdicts.append(
                self._judge(verdict_id, session_id, result.title, result.url,
                            win, claim_tokens)
            )

        session = ClaimSession(
            session_id=session_id,
            query=query,
            created_at=time.time(),
            verdict_ids=tuple(v.verdict_id for v in verdicts),
            warnings=tuple(warnings),
        )
        self.store.put_session(session)
        for verdict in verdicts:
            self.store.put_verdict(verdict)
        return session

    def extend_verdict(self, verdict_id: str) -> DocumentVerdict:
        """Advance a verdict to the next window and re-judge it.

        The verdict keeps its id and session; offset strictly increases by
        the window size. Raises NoMoreContentError at the document's end.
        """
        with self._lock_for(verdict_id):
            verdict = self.store.get_verdict(verdict_id)
            if not verdict.window.has_more:
                raise NoMoreContentError(f"verdict {verdict_id} is at the end of its document")
            session = self.store.get_session(verdict.session_id)
            claim_tokens = tokenize(session.query.normalized)
            content = fetch_content(verdict.page_id, self.content_provider, self.cache)
            win = window(content, verdict.window.offset + verdict.window.size,
                         verdict.window.size)
            updated = self._judge(verdict.verdict_id, verdict.session_id,
                                  verdict.title, verdict.url, win, claim_tokens)
            self.store.put_verdict(updated)
            return updated

    def _judge(
        self,
        verdict_id: str,
        session_id: str,
        title: str,
        url: str,
        win: DocumentWindow,
        claim_tokens: Sequence[str],
    ) -> DocumentVerdict:
        tokens, lead = window_token_view(win.sentences)
        prediction = self.model.predict(claim_tokens, tokens)
        # the model sees at most max_length tokens; the window may hold more
        mask = list(prediction.evidence_mask)
        mask.extend([0] * (len(tokens) - len(mask)))
        snippet = build_snippet(tokens, mask, lead, self.context)
        return DocumentVerdict(
            verdict_id=verdict_id,
            session_id=session_id,
            page_id=win.page_id,
            title=title,
            url=url,
            window=win,
            window_tokens=tuple(tokens),
            lead=lead,
            label=prediction.label,
            label_probs=dict(prediction.label_probs),
            evidence_mask=tuple(mask),
            snippet=tuple(snippet),
        )
