"""Model hyperparameters and their validation."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from claimcheck.errors import InvalidConfigError

CLS_TOKEN = "[CLS]"
SEP_TOKEN = "[SEP]"
PAD_TOKEN = "[PAD]"
UNK_TOKEN = "[UNK]"

RESERVED_TOKENS = (CLS_TOKEN, SEP_TOKEN, PAD_TOKEN, UNK_TOKEN)


@dataclass
class ModelConfig:
    """Hyperparameters for both training phases.

    ``lam`` weighs the explanation loss against the task loss in the combined
    training objective. ``evidence_threshold`` turns per-token evidence
    probabilities into a binary rationale mask; ties round up. ``wildcard``
    replaces non-evidence tokens before the second phase sees a document.
    """

    max_length: int = 128
    lam: float = 1.0
    evidence_threshold: float = 0.5
    wildcard: str = "."

    # encoder size
    embed_dim: int = 48
    num_layers: int = 2
    num_heads: int = 4
    ff_dim: int = 96

    # training
    epochs: int = 8
    learning_rate: float = 2e-3
    batch_size: int = 32
    seed: int = 0
    vocab_min_count: int = 1

    def __post_init__(self):
        if self.max_length < 4:
            raise InvalidConfigError(f"max_length must be >= 4, got {self.max_length}")
        if self.lam < 0:
            raise InvalidConfigError(f"lambda must be nonnegative, got {self.lam}")
        if not 0.0 < self.evidence_threshold < 1.0:
            raise InvalidConfigError(
                f"evidence_threshold must lie strictly in (0, 1), got {self.evidence_threshold}"
            )
        if not self.wildcard or len(self.wildcard.split()) != 1:
            raise InvalidConfigError(f"wildcard must be a single token, got {self.wildcard!r}")
        if self.wildcard in RESERVED_TOKENS:
            raise InvalidConfigError(f"wildcard may not be a reserved marker: {self.wildcard!r}")
        if self.embed_dim % self.num_heads != 0:
            raise InvalidConfigError("embed_dim must be divisible by num_heads")
        for name in (
            "epochs",
            "batch_size",
            "embed_dim",
            "num_layers",
            "num_heads",
            "ff_dim",
            "vocab_min_count",
        ):
            if getattr(self, name) < 1:
                raise InvalidConfigError(f"{name} must be positive")
        if self.learning_rate <= 0:
            raise InvalidConfigError("learning_rate must be positive")

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "ModelConfig":
        return cls(**data)
