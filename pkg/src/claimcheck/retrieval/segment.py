"""Rule-based sentence segmentation and tokenization.

The segmenter splits on sentence-final punctuation (. ! ?) followed by
whitespace and an uppercase letter or digit. Abbreviations mid-sentence
("Dr. smith") survive because the next character is lowercase; the rule is
deliberately simple and documented rather than linguistically complete.
"""

from __future__ import annotations

import re

_BOUNDARY = re.compile(r"(?<=[.!?])\s+(?=[A-Z0-9])")


def segment_sentences(text: str) -> list[str]:
    """Split plain text into sentences.

    Paragraph breaks (blank lines) always end a sentence; within a paragraph
    the punctuation rule applies. Whitespace inside each sentence is collapsed
    and blank results are dropped.
    """
    sentences: list[str] = []
    for paragraph in re.split(r"\n\s*\n", text):
        flat = " ".join(paragraph.split())
        if not flat:
            continue
        for piece in _BOUNDARY.split(flat):
            piece = piece.strip()
            if piece:
                sentences.append(piece)
    return sentences


def tokenize(text: str) -> list[str]:
    # whitespace tokenization, shared by the service layer and exports
    return text.split()
