"""Append-only feedback log with idempotent submission per (verdict, user)."""

from __future__ import annotations

import json
import threading
import time
from pathlib import Path
from typing import Sequence

from claimcheck.errors import InvalidInputError
from claimcheck.feedback.records import (
    AGREED,
    CATEGORIES,
    FeedbackRecord,
    TrustedAnnotation,
    trusted_annotations,
)
from claimcheck.service.sessions import DocumentVerdict, SessionStore

LOG_FORMAT = "claimcheck-feedback"
LOG_VERSION = 1


class FeedbackStore:
    """Persists FeedbackRecords as a headered line-delimited JSON log.

    The log is append-only: record ids are never reused, nothing is deleted,
    and repeat submissions for the same (verdict_id, user_id) return the
    original record unchanged. A single lock serializes writers; readers get
    snapshot copies. ``path=None`` keeps everything in memory.
    """

    def __init__(self, path: str | Path | None, sessions: SessionStore):
        self.path = Path(path) if path is not None else None
        self.sessions = sessions
        self._lock = threading.Lock()
        self._records: list[FeedbackRecord] = []
        self._by_key: dict[tuple[str, str], FeedbackRecord] = {}
        if self.path is not None and self.path.exists():
            self._replay(self.path)

    def _replay(self, path: Path) -> None:
        with path.open("r", encoding="utf-8") as fh:
            header_line = fh.readline().strip()
            if not header_line:
                return  # file created but never written to
            try:
                header = json.loads(header_line)
            except json.JSONDecodeError as exc:
                raise InvalidInputError(f"{path}: corrupt header: {exc}") from exc
            if header.get("format") != LOG_FORMAT:
                raise InvalidInputError(f"{path} is not a feedback log")
            if header.get("version") != LOG_VERSION:
                raise InvalidInputError(
                    f"unsupported feedback log version {header.get('version')!r}"
                )
            for lineno, line in enumerate(fh, start=2):
                line = line.strip()
                if not line:
                    continue
                try:
                    record = FeedbackRecord.from_dict(json.loads(line))
                except json.JSONDecodeError as exc:
                    raise InvalidInputError(f"{path}:{lineno}: invalid JSON: {exc}") from exc
                self._index(record)

    def _index(self, record: FeedbackRecord) -> None:
        self._records.append(record)
        self._by_key[(record.verdict_id, record.user_id)] = record

    def _append_line(self, record: FeedbackRecord) -> None:
        if self.path is None:
            return
        with self.path.open("a", encoding="utf-8") as fh:
            if fh.tell() == 0:
                fh.write(json.dumps({"format": LOG_FORMAT, "version": LOG_VERSION}) + "\n")
            fh.write(json.dumps(record.to_dict()) + "\n")
            fh.flush()

    def _submit(
        self,
        verdict: DocumentVerdict,
        category: str,
        corrected_label: str | None,
        corrected_mask: Sequence[int] | None,
        user_id: str,
    ) -> FeedbackRecord:
        session = self.sessions.get_session(verdict.session_id)
        with self._lock:
            existing = self._by_key.get((verdict.verdict_id, user_id))
            if existing is not None:
                return existing
            record = FeedbackRecord(
                record_id=f"fb-{len(self._records) + 1:06d}",
                verdict_id=verdict.verdict_id,
                session_id=verdict.session_id,
                claim_text=session.query.normalized,
                page_id=verdict.page_id,
                window_offset=verdict.window.offset,
                window_size=verdict.window.size,
                window_tokens=verdict.window_tokens,
                shown_label=verdict.label,
                shown_mask=verdict.evidence_mask,
                agree=category == AGREED,
                category=category,
                corrected_label=corrected_label,
                corrected_mask=None if corrected_mask is None else tuple(corrected_mask),
                user_id=user_id,
                created_at=time.time(),
            )
            self._index(record)
            self._append_line(record)
            return record

    def record_agreement(self, verdict_id: str, user_id: str) -> FeedbackRecord:
        """Accept the machine output verbatim as a trusted annotation."""
        verdict = self.sessions.get_verdict(verdict_id)
        return self._submit(verdict, AGREED, None, None, user_id)

    def record_correction(
        self,
        verdict_id: str,
        category: str,
        user_id: str,
        corrected_label: str | None = None,
        corrected_mask: Sequence[int] | None = None,
    ) -> FeedbackRecord:
        """File a disagreement: corrected evidence, misleading, or irrelevant."""
        if category not in CATEGORIES or category == AGREED:
            raise InvalidInputError(f"invalid correction category {category!r}")
        verdict = self.sessions.get_verdict(verdict_id)
        return self._submit(verdict, category, corrected_label, corrected_mask, user_id)

    def records(self) -> list[FeedbackRecord]:
        with self._lock:
            return list(self._records)

    def annotations(self) -> list[TrustedAnnotation]:
        return trusted_annotations(self.records())

    def __len__(self) -> int:
        with self._lock:
            return len(self._records)
