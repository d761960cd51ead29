"""Two-phase explain-then-predict claim verification model.

Phase 1 is a multi-task network that predicts the verdict label and scores
every document token as evidence. Phase 2 is an independent classifier
trained on documents whose non-evidence tokens were replaced by a wildcard,
so its prediction can only rely on the extracted rationale.
"""

from claimcheck.model.config import ModelConfig
from claimcheck.model.corpus import (
    TrainingInstance,
    load_corpus,
    save_corpus,
    keyword_corpus,
    nationality_corpus,
)
from claimcheck.model.encoding import EncodedInput, Vocabulary, build_input
from claimcheck.model.losses import LossBreakdown, explanation_loss, total_loss
from claimcheck.model.masking import binarize_mask, mask_document, screen_instances
from claimcheck.model.pipeline import PipelinePrediction, TwoPhaseModel, predict
from claimcheck.model.training import (
    MtlPrediction,
    Phase1Model,
    Phase2Model,
    annotate_rationales,
    train_phase1,
    train_phase2,
)

__all__ = [
    "ModelConfig",
    "TrainingInstance",
    "load_corpus",
    "save_corpus",
    "keyword_corpus",
    "nationality_corpus",
    "EncodedInput",
    "Vocabulary",
    "build_input",
    "LossBreakdown",
    "explanation_loss",
    "total_loss",
    "binarize_mask",
    "mask_document",
    "screen_instances",
    "MtlPrediction",
    "Phase1Model",
    "Phase2Model",
    "annotate_rationales",
    "train_phase1",
    "train_phase2",
    "PipelinePrediction",
    "TwoPhaseModel",
    "predict",
]
