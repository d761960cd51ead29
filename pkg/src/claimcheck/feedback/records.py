"""Feedback records and the trusted annotations derived from them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from claimcheck import LABELS
from claimcheck.errors import InvalidInputError
from claimcheck.model.masking import validate_mask

AGREED = "agreed"
CORRECTED_EVIDENCE = "corrected-evidence"
MISLEADING = "misleading"
IRRELEVANT = "irrelevant"
CATEGORIES = (AGREED, CORRECTED_EVIDENCE, MISLEADING, IRRELEVANT)

MACHINE_AGREED = "machine-agreed"
HUMAN_CORRECTED = "human-corrected"


@dataclass(frozen=True)
class FeedbackRecord:
    """One user judgment of one verdict, with the shown state snapshotted.

    ``window_tokens`` snapshots the exact tokens the user saw so masks stay
    interpretable even after the verdict moves to another window.
    """

    record_id: str
    verdict_id: str
    session_id: str
    claim_text: str
    page_id: str
    window_offset: int
    window_size: int
    window_tokens: tuple[str, ...]
    shown_label: str
    shown_mask: tuple[int, ...]
    agree: bool
    category: str
    corrected_label: str | None
    corrected_mask: tuple[int, ...] | None
    user_id: str
    created_at: float

    def __post_init__(self):
        if self.category not in CATEGORIES:
            raise InvalidInputError(f"unknown feedback category {self.category!r}")
        if self.agree != (self.category == AGREED):
            raise InvalidInputError("agree flag must match the agreed category exactly")
        if self.shown_label not in LABELS:
            raise InvalidInputError(f"unknown shown label {self.shown_label!r}")
        validate_mask(self.shown_mask, doc_len=len(self.window_tokens))
        if self.category == CORRECTED_EVIDENCE:
            if self.corrected_label not in LABELS:
                raise InvalidInputError("corrected-evidence feedback needs a corrected label")
            if self.corrected_mask is None:
                raise InvalidInputError("corrected-evidence feedback needs a corrected mask")
            validate_mask(self.corrected_mask, doc_len=len(self.window_tokens))
        else:
            if self.corrected_mask is not None:
                raise InvalidInputError(
                    f"{self.category} feedback must not carry a corrected mask"
                )
            if self.corrected_label is not None:
                raise InvalidInputError(
                    f"{self.category} feedback must not carry a corrected label"
                )

    def to_dict(self) -> dict:
        return {
            "record_id": self.record_id,
            "verdict_id": self.verdict_id,
            "session_id": self.session_id,
            "claim_text": self.claim_text,
            "page_id": self.page_id,
            "window_offset": self.window_offset,
            "window_size": self.window_size,
            "window_tokens": list(self.window_tokens),
            "shown_label": self.shown_label,
            "shown_mask": list(self.shown_mask),
            "agree": self.agree,
            "category": self.category,
            "corrected_label": self.corrected_label,
            "corrected_mask": None if self.corrected_mask is None else list(self.corrected_mask),
            "user_id": self.user_id,
            "created_at": self.created_at,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "FeedbackRecord":
        try:
            corrected_mask = data["corrected_mask"]
            return cls(
                record_id=data["record_id"],
                verdict_id=data["verdict_id"],
                session_id=data["session_id"],
                claim_text=data["claim_text"],
                page_id=data["page_id"],
                window_offset=data["window_offset"],
                window_size=data["window_size"],
                window_tokens=tuple(data["window_tokens"]),
                shown_label=data["shown_label"],
                shown_mask=tuple(data["shown_mask"]),
                agree=data["agree"],
                category=data["category"],
                corrected_label=data["corrected_label"],
                corrected_mask=None if corrected_mask is None else tuple(corrected_mask),
                user_id=data["user_id"],
                created_at=data["created_at"],
            )
        except KeyError as exc:
            raise InvalidInputError(f"feedback record missing field {exc}") from exc


@dataclass(frozen=True)
class TrustedAnnotation:
    """A training-grade (claim, window, label, mask) tuple from one record."""

    claim_text: str
    tokens: tuple[str, ...]
    label: str
    mask: tuple[int, ...]
    provenance: str
    record_id: str
    created_at: float

    def __post_init__(self):
        if self.provenance not in (MACHINE_AGREED, HUMAN_CORRECTED):
            raise InvalidInputError(f"unknown provenance {self.provenance!r}")
        if self.label not in LABELS:
            raise InvalidInputError(f"unknown label {self.label!r}")
        validate_mask(self.mask, doc_len=len(self.tokens))


def annotation_from_record(record: FeedbackRecord) -> TrustedAnnotation | None:
    """Derive the trusted annotation a record implies, if any.

    Agreement copies the machine output verbatim; corrected-evidence uses the
    user's label and mask. Misleading and irrelevant records yield none.
    """
    if record.category == AGREED:
        return TrustedAnnotation(
            claim_text=record.claim_text,
            tokens=record.window_tokens,
            label=record.shown_label,
            mask=record.shown_mask,
            provenance=MACHINE_AGREED,
            record_id=record.record_id,
            created_at=record.created_at,
        )
    if record.category == CORRECTED_EVIDENCE:
        assert record.corrected_label is not None and record.corrected_mask is not None
        return TrustedAnnotation(
            claim_text=record.claim_text,
            tokens=record.window_tokens,
            label=record.corrected_label,
            mask=record.corrected_mask,
            provenance=HUMAN_CORRECTED,
            record_id=record.record_id,
            created_at=record.created_at,
        )
    return None


def trusted_annotations(records: Iterable[FeedbackRecord]) -> list[TrustedAnnotation]:
    out = []
    for record in records:
        annotation = annotation_from_record(record)
        if annotation is not None:
            out.append(annotation)
    return out
