"""The full explain-then-predict pipeline and its checkpoint format."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import torch

from claimcheck.errors import InvalidInputError
from claimcheck.model.config import ModelConfig
from claimcheck.model.corpus import TrainingInstance
from claimcheck.model.encoding import Vocabulary, build_input
from claimcheck.model.masking import binarize_mask, mask_document, screen_instances
from claimcheck.model.network import LabelNetwork, MtlNetwork
from claimcheck.model.training import (
    Phase1Model,
    Phase2Model,
    annotate_rationales,
    train_phase1,
    train_phase2,
)

CHECKPOINT_FORMAT = "claimcheck-checkpoint"
CHECKPOINT_VERSION = 1


@dataclass(frozen=True)
class PipelinePrediction:
    """Verdict for one (claim, document) pair.

    ``evidence_mask`` aligns with the document tokens the encoder saw; when
    the document was truncated it is shorter than the input document and
    ``truncated`` is set.
    """

    label: str
    label_probs: dict[str, float]
    evidence_mask: list[int]
    truncated: bool


def predict(
    claim: Sequence[str],
    document: Sequence[str],
    phase1,
    phase2,
    config: ModelConfig,
) -> PipelinePrediction:
    """Compose the two phases: extract evidence, mask, classify.

    ``phase1`` needs an ``mtl_predict(claim, document)`` method and ``phase2``
    a ``classify(claim, masked_document)`` method, so trained models and test
    stubs are interchangeable.
    """
    encoded = build_input(claim, document, config)
    doc_view = encoded.doc_tokens
    mtl = phase1.mtl_predict(claim, doc_view)
    if len(mtl.evidence_probs) != len(doc_view):
        raise InvalidInputError(
            f"phase 1 produced {len(mtl.evidence_probs)} evidence probabilities "
            f"for {len(doc_view)} document tokens"
        )
    mask = binarize_mask(mtl.evidence_probs, config.evidence_threshold)
    masked = mask_document(doc_view, mask, config.wildcard)
    label, label_probs = phase2.classify(claim, masked)
    return PipelinePrediction(
        label=label,
        label_probs=label_probs,
        evidence_mask=mask,
        truncated=encoded.truncated,
    )


class TwoPhaseModel:
    """Trained pipeline: phase-1 rationale extractor plus phase-2 classifier.

    Instances are immutable after construction and safe for concurrent
    read-only prediction.
    """

    def __init__(self, phase1: Phase1Model, phase2: Phase2Model, config: ModelConfig):
        self.phase1 = phase1
        self.phase2 = phase2
        self.config = config

    @classmethod
    def train(cls, dataset: Sequence[TrainingInstance], config: ModelConfig) -> "TwoPhaseModel":
        """Run the full two-phase training recipe on one corpus.

        Phase 1 trains on gold rationales; its own annotations are then
        screened against gold labels, surviving documents are wildcard-masked,
        and phase 2 trains on the masked corpus. Both phases share one
        vocabulary built from the unmasked corpus.
        """
        if not dataset:
            raise InvalidInputError("training dataset must be non-empty")
        vocab = Vocabulary.build(dataset, config.wildcard, min_count=config.vocab_min_count)
        phase1 = train_phase1(dataset, config, vocab=vocab)
        annotations = annotate_rationales(phase1, dataset, config)
        survivors = screen_instances(dataset, annotations)
        masked = [
            TrainingInstance.make(
                inst.claim,
                mask_document(inst.document, mask, config.wildcard),
                inst.gold_label,
                mask,
            )
            for inst, mask in survivors
        ]
        phase2 = train_phase2(masked, config, vocab=vocab)
        return cls(phase1, phase2, config)

    def predict(self, claim: Sequence[str], document: Sequence[str]) -> PipelinePrediction:
        return predict(claim, document, self.phase1, self.phase2, self.config)

    def save(self, path: str | Path) -> None:
        """Serialize config, vocabulary, and both networks into one file."""
        payload = {
            "format": CHECKPOINT_FORMAT,
            "version": CHECKPOINT_VERSION,
            "config": self.config.to_dict(),
            "vocab": self.phase1.vocab.to_list(),
            "phase1_state": self.phase1.network.state_dict(),
            "phase2_state": self.phase2.network.state_dict(),
        }
        torch.save(payload, str(path))

    @classmethod
    def load(cls, path: str | Path) -> "TwoPhaseModel":
        payload = torch.load(str(path), map_location="cpu", weights_only=False)
        if payload.get("format") != CHECKPOINT_FORMAT:
            raise InvalidInputError(f"not a model checkpoint: {path}")
        if payload.get("version") != CHECKPOINT_VERSION:
            raise InvalidInputError(
                f"unsupported checkpoint version {payload.get('version')!r} in {path}"
            )
        config = ModelConfig.from_dict(payload["config"])
        vocab = Vocabulary.from_list(payload["vocab"])
        net1 = MtlNetwork(len(vocab), config)
        net1.load_state_dict(payload["phase1_state"])
        net2 = LabelNetwork(len(vocab), config)
        net2.load_state_dict(payload["phase2_state"])
        phase1 = Phase1Model(net1, vocab, config, history=[])
        phase2 = Phase2Model(net2, vocab, config, history=[])
        return cls(phase1, phase2, config)
