"""Service configuration: one JSON file, environment only for secrets."""

from __future__ import annotations

import json
from dataclasses import dataclass, field, fields
from pathlib import Path

from claimcheck.errors import InvalidConfigError

PROVIDERS = ("fixture", "live")


@dataclass
class ApiConfig:
    """Everything the serve command needs, with paper-stated defaults.

    The search API key and engine id are deliberately absent: secrets come
    from the environment (SEARCH_API_KEY, SEARCH_ENGINE_ID), never the file.
    """

    checkpoint: str
    provider: str = "fixture"
    fixture_dir: str | None = None
    host: str = "127.0.0.1"
    port: int = 8000
    k: int = 3
    window_size: int = 30
    context: int = 10
    cache_ttl: float = 3600.0
    store_dir: str | None = None
    requests_per_second: float = 5.0

    def __post_init__(self):
        if self.provider not in PROVIDERS:
            raise InvalidConfigError(
                f"provider must be one of {PROVIDERS}, got {self.provider!r}"
            )
        if self.provider == "fixture":
            if not self.fixture_dir:
                raise InvalidConfigError("fixture provider needs fixture_dir")
            if not Path(self.fixture_dir).is_dir():
                raise InvalidConfigError(f"fixture_dir not found: {self.fixture_dir}")
        if not Path(self.checkpoint).is_file():
            raise InvalidConfigError(f"checkpoint not found: {self.checkpoint}")
        if not 1 <= self.k <= 10:
            raise InvalidConfigError(f"k must be in [1, 10], got {self.k}")
        if self.window_size < 1:
            raise InvalidConfigError(f"window_size must be >= 1, got {self.window_size}")
        if self.context < 0:
            raise InvalidConfigError(f"context must be >= 0, got {self.context}")
        if self.store_dir is not None:
            Path(self.store_dir).mkdir(parents=True, exist_ok=True)

    @classmethod
    def from_file(cls, path: str | Path) -> "ApiConfig":
        path = Path(path)
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except OSError as exc:
            raise InvalidConfigError(f"cannot read config {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise InvalidConfigError(f"config {path} is not valid JSON: {exc}") from exc
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise InvalidConfigError(f"unknown config keys: {', '.join(unknown)}")
        if "checkpoint" not in data:
            raise InvalidConfigError("config must name a model checkpoint")
        return cls(**data)
