"""Rationale masks and the operations between the two training phases."""

from __future__ import annotations

from typing import Sequence

from claimcheck.errors import InvalidInputError


def validate_mask(bits: Sequence[int], doc_len: int | None = None) -> None:
    """Check that ``bits`` is a valid rationale mask, optionally of a given length."""
    for b in bits:
        if b not in (0, 1):
            raise InvalidInputError(f"mask values must be 0 or 1, got {b!r}")
    if doc_len is not None and len(bits) != doc_len:
        raise InvalidInputError(f"mask length {len(bits)} != document length {doc_len}")


def binarize_mask(probs: Sequence[float], threshold: float) -> list[int]:
    """Turn per-token evidence probabilities into a binary mask.

    A token is evidence iff its probability is >= threshold, so exact ties
    round up.
    """
    for p in probs:
        if not 0.0 <= p <= 1.0:
            raise InvalidInputError(f"evidence probability out of [0, 1]: {p!r}")
    return [1 if p >= threshold else 0 for p in probs]


def mask_document(document: Sequence[str], mask: Sequence[int], wildcard: str) -> list[str]:
    """Replace non-evidence tokens with the wildcard, preserving positions."""
    if len(document) != len(mask):
        raise InvalidInputError(
            f"mask length {len(mask)} != document length {len(document)}"
        )
    validate_mask(mask)
    return [tok if bit == 1 else wildcard for tok, bit in zip(document, mask)]


def screen_instances(dataset, annotations):
    """Keep only instances whose auxiliary label prediction matched the gold label.

    ``annotations`` holds one ``(predicted_mask, aux_label)`` pair per dataset
    instance, in order. Returns the surviving ``(instance, predicted_mask)``
    pairs, preserving dataset order. Discarding the failures keeps unreliable
    machine rationales out of the second phase's training data.
    """
    if len(dataset) != len(annotations):
        raise InvalidInputError(
            f"dataset length {len(dataset)} != annotations length {len(annotations)}"
        )
    kept = []
    for instance, (mask, aux_label) in zip(dataset, annotations):
        if aux_label == instance.gold_label:
            kept.append((instance, mask))
    return kept
