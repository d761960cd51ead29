"""Claim sessions, per-document verdicts, and their persistent store."""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Iterable

from claimcheck import LABELS
from claimcheck.errors import InvalidInputError, NotFoundError
from claimcheck.retrieval.query import Query
from claimcheck.retrieval.windows import DocumentWindow
from claimcheck.service.snippet import SnippetToken


@dataclass(frozen=True)
class DocumentVerdict:
    """The model's judgment of one claim against one document window.

    ``evidence_mask`` aligns 1:1 with ``window_tokens`` (the whitespace
    tokenization of the window sentences); ``lead`` is the token count of the
    window's first sentence, used for snippet visibility.
    """

    verdict_id: str
    session_id: str
    page_id: str
    title: str
    url: str
    window: DocumentWindow
    window_tokens: tuple[str, ...]
    lead: int
    label: str
    label_probs: dict[str, float]
    evidence_mask: tuple[int, ...]
    snippet: tuple[SnippetToken, ...]

    def __post_init__(self):
        if self.label not in LABELS:
            raise InvalidInputError(f"unknown label {self.label!r}")
        if len(self.evidence_mask) != len(self.window_tokens):
            raise InvalidInputError(
                f"evidence mask length {len(self.evidence_mask)} != "
                f"window token count {len(self.window_tokens)}"
            )
        for item, bit in zip(self.snippet, self.evidence_mask):
            if item.highlighted and bit != 1:
                raise InvalidInputError("snippet highlights a non-evidence token")

    def to_dict(self) -> dict:
        return {
            "verdict_id": self.verdict_id,
            "session_id": self.session_id,
            "page_id": self.page_id,
            "title": self.title,
            "url": self.url,
            "window": {
                "page_id": self.window.page_id,
                "offset": self.window.offset,
                "size": self.window.size,
                "sentences": list(self.window.sentences),
                "has_more": self.window.has_more,
            },
            "window_tokens": list(self.window_tokens),
            "lead": self.lead,
            "label": self.label,
            "label_probs": dict(self.label_probs),
            "evidence_mask": list(self.evidence_mask),
            "snippet": [item.to_dict() for item in self.snippet],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "DocumentVerdict":
        win = data["window"]
        return cls(
            verdict_id=data["verdict_id"],
            session_id=data["session_id"],
            page_id=data["page_id"],
            title=data["title"],
            url=data["url"],
            window=DocumentWindow(
                page_id=win["page_id"],
                offset=win["offset"],
                size=win["size"],
                sentences=tuple(win["sentences"]),
                has_more=win["has_more"],
            ),
            window_tokens=tuple(data["window_tokens"]),
            lead=data["lead"],
            label=data["label"],
            label_probs={k: float(v) for k, v in data["label_probs"].items()},
            evidence_mask=tuple(data["evidence_mask"]),
            snippet=tuple(SnippetToken.from_dict(s) for s in data["snippet"]),
        )


@dataclass(frozen=True)
class ClaimSession:
    """One claim check: the query plus the verdicts it produced, in rank order."""

    session_id: str
    query: Query
    created_at: float
    verdict_ids: tuple[str, ...]
    warnings: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "session_id": self.session_id,
            "query": {"raw": self.query.raw, "normalized": self.query.normalized},
            "created_at": self.created_at,
            "verdict_ids": list(self.verdict_ids),
            "warnings": list(self.warnings),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ClaimSession":
        return cls(
            session_id=data["session_id"],
            query=Query(data["query"]["raw"], data["query"]["normalized"]),
            created_at=data["created_at"],
            verdict_ids=tuple(data["verdict_ids"]),
            warnings=tuple(data.get("warnings", ())),
        )


class SessionStore:
    """Sessions and verdicts, in memory with optional JSONL persistence.

    Writes append one line per put; on load the last line for an id wins, so
    verdict updates (show-more) are plain appends. Pass ``path=None`` for
    memory-only operation in tests.
    """

    def __init__(self, path: str | Path | None = None):
        self.path = Path(path) if path is not None else None
        self._lock = threading.Lock()
        self._sessions: dict[str, ClaimSession] = {}
        self._verdicts: dict[str, DocumentVerdict] = {}
        if self.path is not None and self.path.exists():
            self._replay(self.path)

    def _replay(self, path: Path) -> None:
        with path.open("r", encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    data = json.loads(line)
                except json.JSONDecodeError as exc:
                    raise InvalidInputError(f"{path}:{lineno}: invalid JSON: {exc}") from exc
                if data.get("kind") == "session":
                    session = ClaimSession.from_dict(data["session"])
                    self._sessions[session.session_id] = session
                elif data.get("kind") == "verdict":
                    verdict = DocumentVerdict.from_dict(data["verdict"])
                    self._verdicts[verdict.verdict_id] = verdict
                else:
                    raise InvalidInputError(f"{path}:{lineno}: unknown record kind")

    def _append(self, payload: dict) -> None:
        if self.path is None:
            return
        with self.path.open("a", encoding="utf-8") as fh:
            fh.write(json.dumps(payload) + "\n")
            fh.flush()

    def put_session(self, session: ClaimSession) -> None:
        with self._lock:
            self._sessions[session.session_id] = session
            self._append({"kind": "session", "session": session.to_dict()})

    def put_verdict(self, verdict: DocumentVerdict) -> None:
        with self._lock:
            self._verdicts[verdict.verdict_id] = verdict
            self._append({"kind": "verdict", "verdict": verdict.to_dict()})

    def get_session(self, session_id: str) -> ClaimSession:
        with self._lock:
            try:
                return self._sessions[session_id]
            except KeyError:
                raise NotFoundError(f"no session {session_id!r}") from None

    def get_verdict(self, verdict_id: str) -> DocumentVerdict:
        with self._lock:
            try:
                return self._verdicts[verdict_id]
            except KeyError:
                raise NotFoundError(f"no verdict {verdict_id!r}") from None

    def session_verdicts(self, session_id: str) -> list[DocumentVerdict]:
        session = self.get_session(session_id)
        return [self.get_verdict(vid) for vid in session.verdict_ids]

    def attach_warning(self, session_id: str, message: str) -> ClaimSession:
        with self._lock:
            session = self._sessions.get(session_id)
            if session is None:
                raise NotFoundError(f"no session {session_id!r}")
            updated = replace(session, warnings=session.warnings + (message,))
            self._sessions[session_id] = updated
            self._append({"kind": "session", "session": updated.to_dict()})
            return updated


def window_token_view(sentences: Iterable[str]) -> tuple[list[str], int]:
    """Tokenize window sentences; returns (tokens, first-sentence token count)."""
    tokens: list[str] = []
    lead = 0
    for i, sentence in enumerate(sentences):
        words = sentence.split()
        if i == 0:
            lead = len(words)
        tokens.extend(words)
    return tokens, lead
