"""Training loops for both phases plus rationale annotation.

Both phases are deterministic given the config seed: model initialization,
batch order, and all tensor math run on CPU with fixed seeds and no dropout,
so two runs with identical inputs produce bitwise-identical loss
trajectories.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import torch
import torch.nn.functional as F

from claimcheck import LABELS, SUPPORTS
from claimcheck.errors import EmptyAfterScreeningError, InvalidInputError
from claimcheck.model.config import ModelConfig
from claimcheck.model.corpus import TrainingInstance
from claimcheck.model.encoding import Vocabulary, build_input
from claimcheck.model.losses import LossBreakdown, total_loss
from claimcheck.model.masking import binarize_mask
from claimcheck.model.network import LabelNetwork, MtlNetwork, balanced_explanation_loss

LABEL_TO_INDEX = {label: i for i, label in enumerate(LABELS)}


@dataclass(frozen=True)
class MtlPrediction:
    """Phase-1 output for one input: label distribution and per-token evidence.

    ``evidence_probs`` covers the document tokens the encoder actually saw,
    i.e. the possibly truncated document view.
    """

    label_probs: dict[str, float]
    evidence_probs: list[float]

    @property
    def label(self) -> str:
        return max(LABELS, key=lambda lab: (self.label_probs[lab], lab == SUPPORTS))


@dataclass
class _Batch:
    input_ids: torch.Tensor  # (B, L)
    padding_mask: torch.Tensor  # (B, L) bool, True at padding
    labels: torch.Tensor  # (B,)
    doc_pos: torch.Tensor  # (B, D) index of each doc token in the packed input
    doc_valid: torch.Tensor  # (B, D) bool
    gold_evidence: torch.Tensor  # (B, D) 0/1
    size: int


def _collate(
    instances: Sequence[TrainingInstance], vocab: Vocabulary, config: ModelConfig
) -> _Batch:
    encoded = [build_input(inst.claim, inst.document, config) for inst in instances]
    ids = [vocab.encode(enc.tokens) for enc in encoded]
    max_len = max(len(seq) for seq in ids)
    max_doc = max((len(enc.doc_span) for enc in encoded), default=0)
    max_doc = max(max_doc, 1)  # keep gather well-formed for all-empty documents

    batch = len(instances)
    input_ids = torch.zeros((batch, max_len), dtype=torch.long)
    padding_mask = torch.ones((batch, max_len), dtype=torch.bool)
    labels = torch.zeros((batch,), dtype=torch.long)
    doc_pos = torch.zeros((batch, max_doc), dtype=torch.long)
    doc_valid = torch.zeros((batch, max_doc), dtype=torch.bool)
    gold_evidence = torch.zeros((batch, max_doc), dtype=torch.long)

    for i, (inst, enc, seq) in enumerate(zip(instances, encoded, ids)):
        input_ids[i, : len(seq)] = torch.tensor(seq, dtype=torch.long)
        padding_mask[i, : len(seq)] = False
        labels[i] = LABEL_TO_INDEX[inst.gold_label]
        n_doc = len(enc.doc_span)
        if n_doc:
            doc_pos[i, :n_doc] = torch.arange(enc.doc_span.start, enc.doc_span.stop)
            doc_valid[i, :n_doc] = True
            gold_evidence[i, :n_doc] = torch.tensor(
                inst.gold_mask[:n_doc], dtype=torch.long
            )
    return _Batch(input_ids, padding_mask, labels, doc_pos, doc_valid, gold_evidence, batch)


def _batches(n: int, batch_size: int, generator: torch.Generator):
    perm = torch.randperm(n, generator=generator).tolist()
    for start in range(0, n, batch_size):
        yield perm[start : start + batch_size]


class Phase1Model:
    """Trained multi-task model: label plus token-level evidence."""

    def __init__(self, network: MtlNetwork, vocab: Vocabulary, config: ModelConfig,
                 history: list[LossBreakdown]):
        self.network = network
        self.vocab = vocab
        self.config = config
        self.history = history
        self.network.eval()

    @property
    def final_loss(self) -> float:
        return self.history[-1].total

    @torch.no_grad()
    def mtl_predict_batch(self, pairs: Sequence[tuple[Sequence[str], Sequence[str]]]) -> list[MtlPrediction]:
        """Predict label and evidence probabilities for (claim, document) pairs."""
        stand_ins = [
            TrainingInstance.make(claim, doc, SUPPORTS, [0] * len(doc))
            for claim, doc in pairs
        ]
        out: list[MtlPrediction] = []
        for start in range(0, len(stand_ins), self.config.batch_size):
            chunk = stand_ins[start : start + self.config.batch_size]
            batch = _collate(chunk, self.vocab, self.config)
            label_logits, evidence_logits = self.network(batch.input_ids, batch.padding_mask)
            label_probs = F.softmax(label_logits, dim=-1)
            ev_probs = torch.sigmoid(torch.gather(evidence_logits, 1, batch.doc_pos))
            for i in range(batch.size):
                n_doc = int(batch.doc_valid[i].sum().item())
                out.append(
                    MtlPrediction(
                        label_probs={lab: float(label_probs[i, j]) for lab, j in LABEL_TO_INDEX.items()},
                        evidence_probs=[float(p) for p in ev_probs[i, :n_doc]],
                    )
                )
        return out

    def mtl_predict(self, claim: Sequence[str], document: Sequence[str]) -> MtlPrediction:
        return self.mtl_predict_batch([(claim, document)])[0]


class Phase2Model:
    """Trained label-only classifier over wildcard-masked documents."""

    def __init__(self, network: LabelNetwork, vocab: Vocabulary, config: ModelConfig,
                 history: list[LossBreakdown]):
        self.network = network
        self.vocab = vocab
        self.config = config
        self.history = history
        self.network.eval()

    @property
    def final_loss(self) -> float:
        return self.history[-1].total

    @torch.no_grad()
    def classify(self, claim: Sequence[str], masked_document: Sequence[str]) -> tuple[str, dict[str, float]]:
        inst = TrainingInstance.make(claim, masked_document, SUPPORTS, [0] * len(masked_document))
        batch = _collate([inst], self.vocab, self.config)
        logits = self.network(batch.input_ids, batch.padding_mask)
        probs = F.softmax(logits, dim=-1)[0]
        label_probs = {lab: float(probs[j]) for lab, j in LABEL_TO_INDEX.items()}
        label = max(LABELS, key=lambda lab: (label_probs[lab], lab == SUPPORTS))
        return label, label_probs


def mtl_loss(network, batch: _Batch, lam: float) -> tuple[torch.Tensor, torch.Tensor, torch.Tensor]:
    """Differentiable combined objective for one batch: (task, exp, total).

    For label-only networks the explanation term is a constant zero. This is
    the single loss path shared by the training loop and the gradient checks.
    """
    if isinstance(network, MtlNetwork):
        label_logits, evidence_logits = network(batch.input_ids, batch.padding_mask)
        ev_probs = torch.sigmoid(torch.gather(evidence_logits, 1, batch.doc_pos))
        exp = balanced_explanation_loss(ev_probs, batch.gold_evidence, batch.doc_valid).mean()
    else:
        label_logits = network(batch.input_ids, batch.padding_mask)
        exp = torch.zeros((), dtype=label_logits.dtype)
    task = F.cross_entropy(label_logits, batch.labels)
    return task, exp, task + lam * exp


def _run_epochs(network, dataset, vocab, config) -> list[LossBreakdown]:
    optimizer = torch.optim.Adam(network.parameters(), lr=config.learning_rate)
    order = torch.Generator().manual_seed(config.seed)
    history: list[LossBreakdown] = []
    network.train()
    for _ in range(config.epochs):
        task_sum = 0.0
        exp_sum = 0.0
        for indices in _batches(len(dataset), config.batch_size, order):
            batch = _collate([dataset[i] for i in indices], vocab, config)
            optimizer.zero_grad()
            task, exp, loss = mtl_loss(network, batch, config.lam)
            loss.backward()
            optimizer.step()
            task_sum += float(task.detach()) * batch.size
            exp_sum += float(exp.detach()) * batch.size
        history.append(
            total_loss(task_sum / len(dataset), exp_sum / len(dataset), config.lam)
        )
    network.eval()
    return history


def _check_dataset(dataset: Sequence[TrainingInstance], config: ModelConfig) -> None:
    for inst in dataset:
        if len(inst.claim) + 2 > config.max_length:
            raise InvalidInputError(
                f"claim of {len(inst.claim)} tokens does not fit max_length {config.max_length}"
            )


def train_phase1(
    dataset: Sequence[TrainingInstance],
    config: ModelConfig,
    vocab: Vocabulary | None = None,
) -> Phase1Model:
    """Train the multi-task label + evidence model on gold rationales."""
    if not dataset:
        raise InvalidInputError("training dataset must be non-empty")
    _check_dataset(dataset, config)
    if vocab is None:
        vocab = Vocabulary.build(dataset, config.wildcard, min_count=config.vocab_min_count)
    torch.manual_seed(config.seed)
    network = MtlNetwork(len(vocab), config)
    history = _run_epochs(network, dataset, vocab, config)
    return Phase1Model(network, vocab, config, history)


def train_phase2(
    masked_dataset: Sequence[TrainingInstance],
    config: ModelConfig,
    vocab: Vocabulary | None = None,
) -> Phase2Model:
    """Train the label-only classifier on wildcard-masked documents."""
    if not masked_dataset:
        raise EmptyAfterScreeningError(
            "screening left no training instances: the phase-1 model matched no gold "
            "labels, so there is nothing trustworthy to train the second phase on"
        )
    _check_dataset(masked_dataset, config)
    if vocab is None:
        vocab = Vocabulary.build(masked_dataset, config.wildcard, min_count=config.vocab_min_count)
    torch.manual_seed(config.seed)
    network = LabelNetwork(len(vocab), config)
    history = _run_epochs(network, masked_dataset, vocab, config)
    return Phase2Model(network, vocab, config, history)


def annotate_rationales(
    model: Phase1Model,
    dataset: Sequence[TrainingInstance],
    config: ModelConfig,
) -> list[tuple[list[int], str]]:
    """Run phase 1 over the dataset and emit (predicted mask, auxiliary label) pairs.

    Masks are binarized at the config threshold and padded with zeros to the
    full document length when the encoder truncated the document.
    """
    preds = model.mtl_predict_batch([(inst.claim, inst.document) for inst in dataset])
    annotations: list[tuple[list[int], str]] = []
    for inst, pred in zip(dataset, preds):
        mask = binarize_mask(pred.evidence_probs, config.evidence_threshold)
        mask.extend([0] * (len(inst.document) - len(mask)))
        annotations.append((mask, pred.label))
    return annotations
