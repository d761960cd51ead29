"""Training objective: class-balanced explanation loss plus task loss.

These are the reference (pure Python) definitions. Training uses a batched
tensor twin in :mod:`claimcheck.model.network`; a unit test keeps the two in
agreement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from claimcheck.errors import InvalidConfigError, InvalidInputError

# The loss is undefined at probability exactly 0 or 1, so probabilities are
# clamped away from the boundary before taking logs.
PROB_FLOOR = 1e-7


def _clamp(p: float) -> float:
    return min(max(p, PROB_FLOOR), 1.0 - PROB_FLOOR)


def explanation_loss(evidence_probs: Sequence[float], gold_mask: Sequence[int]) -> float:
    """Class-balanced binary cross entropy over document tokens.

    Evidence tokens and non-evidence tokens each contribute a per-token BCE
    sum scaled by the inverse of their class size, so a handful of evidence
    tokens is not drowned out by a long document. When the gold mask contains
    no token of one class, that class term is 0.
    """
    if len(evidence_probs) != len(gold_mask):
        raise InvalidInputError(
            f"evidence_probs length {len(evidence_probs)} != gold mask length {len(gold_mask)}"
        )
    pos_sum = 0.0
    neg_sum = 0.0
    n_pos = 0
    n_neg = 0
    for p, bit in zip(evidence_probs, gold_mask):
        if bit not in (0, 1):
            raise InvalidInputError(f"gold mask values must be 0 or 1, got {bit!r}")
        if not 0.0 <= p <= 1.0:
            raise InvalidInputError(f"evidence probability out of [0, 1]: {p!r}")
        if bit == 1:
            pos_sum += -math.log(_clamp(p))
            n_pos += 1
        else:
            neg_sum += -math.log(_clamp(1.0 - p))
            n_neg += 1
    loss = 0.0
    if n_pos:
        loss += pos_sum / n_pos
    if n_neg:
        loss += neg_sum / n_neg
    return loss


def label_loss(label_probs: Sequence[float], gold_index: int) -> float:
    """Cross entropy of the predicted label distribution against the gold label."""
    if gold_index not in range(len(label_probs)):
        raise InvalidInputError(f"gold label index {gold_index} out of range")
    return -math.log(_clamp(label_probs[gold_index]))


@dataclass(frozen=True)
class LossBreakdown:
    """One training objective evaluation, kept decomposed for inspection."""

    task_loss: float
    exp_loss: float
    lam: float
    total: float


def total_loss(task_loss: float, exp_loss: float, lam: float) -> LossBreakdown:
    """Combine task and explanation losses: ``total = task + lambda * exp``."""
    if lam < 0:
        raise InvalidConfigError(f"lambda must be nonnegative, got {lam}")
    if task_loss < 0 or exp_loss < 0:
        raise InvalidInputError("losses must be nonnegative")
    return LossBreakdown(
        task_loss=task_loss,
        exp_loss=exp_loss,
        lam=lam,
        total=task_loss + lam * exp_loss,
    )
