"""HTTP surface: claim submission, show-more, feedback, export, schemas."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, StreamingResponse

from claimcheck.errors import (
    EmptyClaimError,
    InvalidInputError,
    NoMoreContentError,
    NotFoundError,
    ProviderError,
)
from claimcheck.feedback.records import AGREED
from claimcheck.feedback.store import FeedbackStore
from claimcheck.api.schemas import (
    ClaimRequest,
    FeedbackRequest,
    FeedbackResponse,
    SessionPayload,
    VerdictPayload,
    feedback_response,
    published_schemas,
    session_payload,
    verdict_payload,
)
from claimcheck.feedback.export import export_rows, iter_export_lines
from claimcheck.service.checker import ClaimChecker

_STATUS_BY_ERROR = [
    (EmptyClaimError, 400),
    (NoMoreContentError, 409),
    (NotFoundError, 404),
    (InvalidInputError, 422),
    (ProviderError, 502),
]


def create_app(checker: ClaimChecker, feedback: FeedbackStore) -> FastAPI:
    """Assemble the API around a claim checker and a feedback store."""
    app = FastAPI(title="claimcheck", version="0.1.0")

    def _register(error_type, status):
        async def handler(request: Request, exc: Exception) -> JSONResponse:
            return JSONResponse(status_code=status, content={"detail": str(exc)})

        app.add_exception_handler(error_type, handler)

    for error_type, status in _STATUS_BY_ERROR:
        _register(error_type, status)

    @app.post("/claims", response_model=SessionPayload)
    def submit_claim(body: ClaimRequest) -> SessionPayload:
        session = checker.check_claim(body.claim, body.k)
        verdicts = checker.store.session_verdicts(session.session_id)
        return session_payload(session, verdicts)

    @app.get("/sessions/{session_id}", response_model=SessionPayload)
    def get_session(session_id: str) -> SessionPayload:
        session = checker.store.get_session(session_id)
        verdicts = checker.store.session_verdicts(session_id)
        return session_payload(session, verdicts)

    @app.post("/verdicts/{verdict_id}/more", response_model=VerdictPayload)
    def show_more(verdict_id: str) -> VerdictPayload:
        return verdict_payload(checker.extend_verdict(verdict_id))

    @app.post("/verdicts/{verdict_id}/feedback", response_model=FeedbackResponse)
    def submit_feedback(verdict_id: str, body: FeedbackRequest) -> FeedbackResponse:
        if body.agree:
            if body.category not in (None, AGREED):
                raise InvalidInputError(
                    f"agree=true conflicts with category {body.category!r}"
                )
            if body.corrected_label is not None or body.corrected_mask is not None:
                raise InvalidInputError("agreement must not carry corrections")
            record = feedback.record_agreement(verdict_id, body.user_id)
        else:
            if body.category is None:
                raise InvalidInputError("disagreement needs a category")
            record = feedback.record_correction(
                verdict_id,
                body.category,
                body.user_id,
                corrected_label=body.corrected_label,
                corrected_mask=body.corrected_mask,
            )
        return feedback_response(record)

    @app.get("/export")
    def export(since: float | None = None, categories: str | None = None):
        wanted = None
        if categories:
            wanted = [c.strip() for c in categories.split(",") if c.strip()]
        rows = export_rows(feedback, categories=wanted, since=since)
        return StreamingResponse(
            iter_export_lines(rows), media_type="application/x-ndjson"
        )

    @app.get("/schemas")
    def schemas() -> dict:
        return published_schemas()

    return app
