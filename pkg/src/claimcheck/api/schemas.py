"""Wire payloads for the HTTP API.

The mask wire format pairs a ``tokens`` array with a 0/1 ``mask`` array of
the same length, plus per-token visibility, so client and server never
tokenize independently.
"""

from __future__ import annotations

from pydantic import BaseModel, Field

from claimcheck.feedback.records import FeedbackRecord
from claimcheck.service.sessions import ClaimSession, DocumentVerdict
from claimcheck.service.snippet import display_segments


class ClaimRequest(BaseModel):
    claim: str
    k: int | None = Field(default=None, ge=1, le=10)


class SnippetTokenPayload(BaseModel):
    token: str
    highlighted: bool
    visible: bool


class VerdictPayload(BaseModel):
    verdict_id: str
    page_id: str
    title: str
    url: str
    label: str
    label_probs: dict[str, float]
    tokens: list[str]
    mask: list[int]
    snippet: list[SnippetTokenPayload]
    display: list[str]
    offset: int
    window_size: int
    has_more: bool


class SessionPayload(BaseModel):
    session_id: str
    claim: str
    no_results: bool
    verdicts: list[VerdictPayload]
    warnings: list[str]


class FeedbackRequest(BaseModel):
    """Either ``agree: true`` alone or a correction category with its fields."""

    agree: bool = False
    category: str | None = None
    corrected_label: str | None = None
    corrected_mask: list[int] | None = None
    user_id: str = "anonymous"


class FeedbackResponse(BaseModel):
    record_id: str
    category: str
    created_at: float


def verdict_payload(verdict: DocumentVerdict) -> VerdictPayload:
    return VerdictPayload(
        verdict_id=verdict.verdict_id,
        page_id=verdict.page_id,
        title=verdict.title,
        url=verdict.url,
        label=verdict.label,
        label_probs=dict(verdict.label_probs),
        tokens=list(verdict.window_tokens),
        mask=list(verdict.evidence_mask),
        snippet=[SnippetTokenPayload(**item.to_dict()) for item in verdict.snippet],
        display=display_segments(verdict.snippet),
        offset=verdict.window.offset,
        window_size=verdict.window.size,
        has_more=verdict.window.has_more,
    )


def session_payload(session: ClaimSession, verdicts: list[DocumentVerdict]) -> SessionPayload:
    return SessionPayload(
        session_id=session.session_id,
        claim=session.query.raw,
        no_results=not verdicts,
        verdicts=[verdict_payload(v) for v in verdicts],
        warnings=list(session.warnings),
    )


def feedback_response(record: FeedbackRecord) -> FeedbackResponse:
    return FeedbackResponse(
        record_id=record.record_id,
        category=record.category,
        created_at=record.created_at,
    )


PAYLOAD_MODELS = {
    "ClaimRequest": ClaimRequest,
    "SessionPayload": SessionPayload,
    "VerdictPayload": VerdictPayload,
    "SnippetTokenPayload": SnippetTokenPayload,
    "FeedbackRequest": FeedbackRequest,
    "FeedbackResponse": FeedbackResponse,
}


def published_schemas() -> dict[str, dict]:
    return {name: model.model_json_schema() for name, model in PAYLOAD_MODELS.items()}
