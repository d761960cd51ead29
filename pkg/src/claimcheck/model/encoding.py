"""Token sequences, vocabulary, and model input construction."""

from __future__ import annotations

import string
from dataclasses import dataclass
from typing import Iterable, Sequence

from claimcheck.errors import InvalidInputError
from claimcheck.model.config import (
    CLS_TOKEN,
    PAD_TOKEN,
    RESERVED_TOKENS,
    SEP_TOKEN,
    UNK_TOKEN,
    ModelConfig,
)

_PUNCT = string.punctuation + "‘’“”"


def normalize_token(token: str) -> str:
    """Lowercase and strip surrounding punctuation for vocabulary lookup.

    Tokens that are punctuation-only (notably the wildcard ".") are kept
    verbatim so they stay distinct vocabulary entries.
    """
    lowered = token.lower()
    stripped = lowered.strip(_PUNCT)
    return stripped if stripped else lowered


def validate_tokens(tokens: Sequence[str], what: str = "sequence") -> None:
    """Reject token sequences that contain reserved marker strings."""
    for tok in tokens:
        if tok in RESERVED_TOKENS:
            raise InvalidInputError(f"{what} contains reserved marker token {tok!r}")


@dataclass(frozen=True)
class EncodedInput:
    """A claim and document packed into one model input.

    ``tokens`` is ``[CLS] claim [SEP] document``; ``claim_span`` and
    ``doc_span`` index into it. Only document tokens are ever dropped when
    the packed sequence would exceed ``max_length``.
    """

    tokens: list[str]
    claim_span: range
    doc_span: range
    truncated: bool

    @property
    def claim_tokens(self) -> list[str]:
        return self.tokens[self.claim_span.start : self.claim_span.stop]

    @property
    def doc_tokens(self) -> list[str]:
        return self.tokens[self.doc_span.start : self.doc_span.stop]


def build_input(
    claim: Sequence[str], document: Sequence[str], config: ModelConfig
) -> EncodedInput:
    """Pack claim and document into ``[CLS] claim [SEP] document``.

    Claims are never truncated; when the total length exceeds
    ``config.max_length``, document tokens are dropped from the right.
    """
    if not claim:
        raise InvalidInputError("claim must be non-empty")
    validate_tokens(claim, "claim")
    validate_tokens(document, "document")
    overhead = 2  # [CLS] and [SEP]
    if len(claim) + overhead > config.max_length:
        raise InvalidInputError(
            f"claim of {len(claim)} tokens does not fit max_length {config.max_length}"
        )
    doc_budget = config.max_length - overhead - len(claim)
    kept = list(document[:doc_budget])
    tokens = [CLS_TOKEN, *claim, SEP_TOKEN, *kept]
    claim_span = range(1, 1 + len(claim))
    doc_start = 2 + len(claim)
    return EncodedInput(
        tokens=tokens,
        claim_span=claim_span,
        doc_span=range(doc_start, doc_start + len(kept)),
        truncated=len(kept) < len(document),
    )


class Vocabulary:
    """Token-to-id mapping with fixed special tokens.

    Lookup goes through :func:`normalize_token`, so raw display tokens like
    ``"Company,"`` resolve to their clean form. Unknown tokens map to the
    unknown id.
    """

    def __init__(self, tokens: Iterable[str]):
        self._tokens = [PAD_TOKEN, UNK_TOKEN, CLS_TOKEN, SEP_TOKEN]
        seen = set(self._tokens)
        for tok in tokens:
            if tok not in seen:
                seen.add(tok)
                self._tokens.append(tok)
        self._ids = {tok: i for i, tok in enumerate(self._tokens)}

    @classmethod
    def build(cls, instances, wildcard: str, min_count: int = 1) -> "Vocabulary":
        """Collect normalized tokens from training instances, plus the wildcard.

        Tokens seen fewer than ``min_count`` times are left out, so they train
        as unknowns; that gives the encoder some exposure to the unknown id
        before it meets out-of-vocabulary text at inference time.
        """
        counts: dict[str, int] = {}
        order: list[str] = []
        for inst in instances:
            for tok in list(inst.claim) + list(inst.document):
                norm = normalize_token(tok)
                if norm not in counts:
                    counts[norm] = 0
                    order.append(norm)
                counts[norm] += 1
        tokens = [normalize_token(wildcard)]
        tokens += [tok for tok in order if counts[tok] >= min_count and tok != tokens[0]]
        return cls(tokens)

    def __len__(self) -> int:
        return len(self._tokens)

    @property
    def pad_id(self) -> int:
        return 0

    @property
    def unk_id(self) -> int:
        return 1

    def encode_token(self, token: str) -> int:
        if token in self._ids:  # specials are looked up verbatim
            return self._ids[token]
        return self._ids.get(normalize_token(token), self.unk_id)

    def encode(self, tokens: Sequence[str]) -> list[int]:
        return [self.encode_token(t) for t in tokens]

    def to_list(self) -> list[str]:
        return list(self._tokens)

    @classmethod
    def from_list(cls, tokens: Sequence[str]) -> "Vocabulary":
        vocab = cls.__new__(cls)
        vocab._tokens = list(tokens)
        vocab._ids = {tok: i for i, tok in enumerate(vocab._tokens)}
        return vocab
