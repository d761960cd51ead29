"""One-shot fine-tuning on exported feedback."""

from __future__ import annotations

from typing import Iterable, Sequence

from claimcheck.errors import InvalidInputError
from claimcheck.feedback.export import training_instances
from claimcheck.model.config import ModelConfig
from claimcheck.model.corpus import TrainingInstance
from claimcheck.model.pipeline import TwoPhaseModel


def fine_tune(
    export: Iterable[dict],
    base_corpus: Sequence[TrainingInstance],
    config: ModelConfig,
) -> TwoPhaseModel:
    """Retrain both phases on the base corpus unioned with exported feedback.

    The export must contain at least one trainable row (agreed or corrected);
    sidecar rows are ignored. Returns the freshly trained model; persisting it
    is the caller's concern.
    """
    extra = training_instances(export)
    if not extra:
        raise InvalidInputError("export contains no trainable records")
    return TwoPhaseModel.train(list(base_corpus) + extra, config)
