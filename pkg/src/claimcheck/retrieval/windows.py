"""Fixed-size sentence windows with pagination."""

from __future__ import annotations

from dataclasses import dataclass

from claimcheck.errors import InvalidInputError
from claimcheck.retrieval.content import DocumentContent

DEFAULT_WINDOW_SIZE = 30


@dataclass(frozen=True)
class DocumentWindow:
    page_id: str
    offset: int
    size: int
    sentences: tuple[str, ...]
    has_more: bool


def window(content: DocumentContent, offset: int, size: int = DEFAULT_WINDOW_SIZE) -> DocumentWindow:
    """Slice ``size`` sentences starting at ``offset``, clipped to the end.

    An offset at or past the end yields an empty window with has_more false;
    ``has_more`` is true exactly when sentences remain past this window.
    """
    if offset < 0:
        raise InvalidInputError(f"offset must be >= 0, got {offset}")
    if size < 1:
        raise InvalidInputError(f"size must be >= 1, got {size}")
    return DocumentWindow(
        page_id=content.page_id,
        offset=offset,
        size=size,
        sentences=content.sentences[offset : offset + size],
        has_more=offset + size < len(content.sentences),
    )
