"""Display snippets: evidence plus lead and trailing context, rest elided.

A snippet keeps every window token but marks which ones the user should see.
A token is visible when it falls in the article lead, is itself evidence, or
trails a piece of evidence closely; contiguous hidden runs collapse into one
ellipsis placeholder at display time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from claimcheck.errors import InvalidInputError
from claimcheck.model.masking import validate_mask

DEFAULT_CONTEXT = 10
ELLIPSIS = "..."


@dataclass(frozen=True)
class SnippetToken:
    token: str
    highlighted: bool
    visible: bool

    def to_dict(self) -> dict:
        return {"token": self.token, "highlighted": self.highlighted, "visible": self.visible}

    @classmethod
    def from_dict(cls, data: dict) -> "SnippetToken":
        return cls(str(data["token"]), bool(data["highlighted"]), bool(data["visible"]))


def build_snippet(
    window_tokens: Sequence[str],
    evidence_mask: Sequence[int],
    lead: int,
    context: int = DEFAULT_CONTEXT,
) -> list[SnippetToken]:
    """Mark each token highlighted and/or visible.

    visible(i) holds iff i < lead, or mask[i] is 1, or some evidence token
    precedes i within ``context`` positions. highlighted(i) iff mask[i] is 1,
    so a highlighted token is always visible.
    """
    validate_mask(evidence_mask, doc_len=len(window_tokens))
    if lead < 0:
        raise InvalidInputError(f"lead must be >= 0, got {lead}")
    if context < 0:
        raise InvalidInputError(f"context must be >= 0, got {context}")
    snippet = []
    last_evidence = None
    for i, (token, bit) in enumerate(zip(window_tokens, evidence_mask)):
        highlighted = bit == 1
        trailing = last_evidence is not None and i - last_evidence <= context
        visible = i < lead or highlighted or trailing
        snippet.append(SnippetToken(token, highlighted, visible))
        if highlighted:
            last_evidence = i
    return snippet


def display_segments(snippet: Sequence[SnippetToken], placeholder: str = ELLIPSIS) -> list[str]:
    """Collapse each hidden run into a single placeholder string."""
    segments: list[str] = []
    hidden_run = False
    for item in snippet:
        if item.visible:
            segments.append(item.token)
            hidden_run = False
        elif not hidden_run:
            segments.append(placeholder)
            hidden_run = True
    return segments
