"""Small transformer encoder with label and evidence heads.

The encoder is trained from random initialization on miniature corpora; a
pre-trained contextual encoder could be swapped in behind the same heads but
is not required at this scale.
"""

from __future__ import annotations

import torch
from torch import Tensor, nn

from claimcheck.model.config import ModelConfig
from claimcheck.model.losses import PROB_FLOOR


class TextEncoder(nn.Module):
    """Token + position embeddings feeding a stack of transformer layers."""

    def __init__(self, vocab_size: int, config: ModelConfig):
        super().__init__()
        self.token_embed = nn.Embedding(vocab_size, config.embed_dim, padding_idx=0)
        self.pos_embed = nn.Embedding(config.max_length, config.embed_dim)
        layer = nn.TransformerEncoderLayer(
            d_model=config.embed_dim,
            nhead=config.num_heads,
            dim_feedforward=config.ff_dim,
            dropout=0.0,  # keeps training and inference deterministic
            activation="gelu",
            batch_first=True,
        )
        self.layers = nn.TransformerEncoder(
            layer, num_layers=config.num_layers, enable_nested_tensor=False
        )
        self.norm = nn.LayerNorm(config.embed_dim)

    def forward(self, input_ids: Tensor, padding_mask: Tensor) -> Tensor:
        """input_ids: (B, L) int64; padding_mask: (B, L) bool, True at padding."""
        positions = torch.arange(input_ids.shape[1], device=input_ids.device)
        hidden = self.token_embed(input_ids) + self.pos_embed(positions)[None, :, :]
        hidden = self.layers(hidden, src_key_padding_mask=padding_mask)
        return self.norm(hidden)


class MtlNetwork(nn.Module):
    """Phase-1 network: shared encoder, label head on [CLS], per-token evidence head."""

    def __init__(self, vocab_size: int, config: ModelConfig):
        super().__init__()
        self.encoder = TextEncoder(vocab_size, config)
        self.label_head = nn.Linear(config.embed_dim, 2)
        self.evidence_head = nn.Linear(config.embed_dim, 1)

    def forward(self, input_ids: Tensor, padding_mask: Tensor) -> tuple[Tensor, Tensor]:
        hidden = self.encoder(input_ids, padding_mask)
        label_logits = self.label_head(hidden[:, 0, :])
        evidence_logits = self.evidence_head(hidden).squeeze(-1)
        return label_logits, evidence_logits


class LabelNetwork(nn.Module):
    """Phase-2 network: the same encoder architecture with only a label head."""

    def __init__(self, vocab_size: int, config: ModelConfig):
        super().__init__()
        self.encoder = TextEncoder(vocab_size, config)
        self.label_head = nn.Linear(config.embed_dim, 2)

    def forward(self, input_ids: Tensor, padding_mask: Tensor) -> Tensor:
        hidden = self.encoder(input_ids, padding_mask)
        return self.label_head(hidden[:, 0, :])


def balanced_explanation_loss(
    evidence_probs: Tensor, gold_mask: Tensor, valid: Tensor
) -> Tensor:
    """Batched tensor twin of :func:`claimcheck.model.losses.explanation_loss`.

    ``evidence_probs`` has shape (B, D) over padded document positions,
    ``gold_mask`` the 0/1 targets, ``valid`` True at real document tokens.
    Returns the per-instance losses, shape (B,). Instances whose gold mask
    lacks one class contribute 0 for that class term.
    """
    probs = evidence_probs.clamp(PROB_FLOOR, 1.0 - PROB_FLOOR)
    is_pos = (gold_mask == 1) & valid
    is_neg = (gold_mask == 0) & valid
    pos_loss = torch.where(is_pos, -torch.log(probs), torch.zeros_like(probs)).sum(dim=1)
    neg_loss = torch.where(is_neg, -torch.log(1.0 - probs), torch.zeros_like(probs)).sum(dim=1)
    n_pos = is_pos.sum(dim=1)
    n_neg = is_neg.sum(dim=1)
    loss = torch.zeros_like(pos_loss)
    loss = loss + torch.where(n_pos > 0, pos_loss / n_pos.clamp(min=1), torch.zeros_like(pos_loss))
    loss = loss + torch.where(n_neg > 0, neg_loss / n_neg.clamp(min=1), torch.zeros_like(neg_loss))
    return loss
