"""Label accuracy and rationale token metrics on held-out data."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from claimcheck.model.config import ModelConfig
from claimcheck.model.corpus import TrainingInstance
from claimcheck.model.pipeline import TwoPhaseModel
from claimcheck.model.training import Phase1Model, annotate_rationales


@dataclass(frozen=True)
class TokenCounts:
    tp: int = 0
    fp: int = 0
    fn: int = 0

    def add(self, predicted: Sequence[int], gold: Sequence[int]) -> "TokenCounts":
        tp = self.tp
        fp = self.fp
        fn = self.fn
        for p, g in zip(predicted, gold):
            if p == 1 and g == 1:
                tp += 1
            elif p == 1:
                fp += 1
            elif g == 1:
                fn += 1
        return TokenCounts(tp, fp, fn)

    @property
    def precision(self) -> float:
        return self.tp / (self.tp + self.fp) if self.tp + self.fp else 0.0

    @property
    def recall(self) -> float:
        return self.tp / (self.tp + self.fn) if self.tp + self.fn else 0.0

    @property
    def f1(self) -> float:
        denom = 2 * self.tp + self.fp + self.fn
        return 2 * self.tp / denom if denom else 0.0


def evaluate_phase1(
    model: Phase1Model, instances: Sequence[TrainingInstance], config: ModelConfig
) -> dict:
    """Phase-1 label accuracy and micro-averaged rationale token F1."""
    annotations = annotate_rationales(model, instances, config)
    correct = 0
    counts = TokenCounts()
    for inst, (mask, label) in zip(instances, annotations):
        if label == inst.gold_label:
            correct += 1
        counts = counts.add(mask, inst.gold_mask)
    n = len(instances)
    return {
        "n": n,
        "label_accuracy": correct / n if n else 0.0,
        "token_precision": counts.precision,
        "token_recall": counts.recall,
        "token_f1": counts.f1,
    }


def evaluate_pipeline(model: TwoPhaseModel, instances: Sequence[TrainingInstance]) -> dict:
    """End-to-end accuracy of the phase-2 verdict on phase-1-masked inputs."""
    correct = 0
    counts = TokenCounts()
    for inst in instances:
        pred = model.predict(inst.claim, inst.document)
        if pred.label == inst.gold_label:
            correct += 1
        mask = list(pred.evidence_mask) + [0] * (len(inst.document) - len(pred.evidence_mask))
        counts = counts.add(mask, inst.gold_mask)
    n = len(instances)
    return {
        "n": n,
        "label_accuracy": correct / n if n else 0.0,
        "token_precision": counts.precision,
        "token_recall": counts.recall,
        "token_f1": counts.f1,
    }
