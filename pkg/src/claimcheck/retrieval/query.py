"""Claim preprocessing."""

from __future__ import annotations

from dataclasses import dataclass

from claimcheck.errors import EmptyClaimError


@dataclass(frozen=True)
class Query:
    """A user claim in raw and normalized form.

    ``normalized`` is lowercase, stripped, with internal whitespace collapsed
    to single spaces. ``raw`` is preserved verbatim for display and storage.
    """

    raw: str
    normalized: str


def preprocess_claim(raw: str) -> Query:
    """Normalize a raw claim string into a Query.

    Raises EmptyClaimError when nothing is left after normalization.
    """
    normalized = " ".join(raw.lower().split())
    if not normalized:
        raise EmptyClaimError("claim is empty after normalization")
    return Query(raw=raw, normalized=normalized)
