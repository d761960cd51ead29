"""Export of feedback as training data, and the matching import.

An export is line-delimited JSON with two row shapes:

* training rows carry ``provenance`` and follow the corpus record schema
  (claim, document, label, mask), so they feed straight into training;
* sidecar rows carry ``category`` (misleading or irrelevant) and the label
  that was shown; the classifier is binary and cannot train on them, but they
  are preserved for analysis.

Export then import reproduces the annotation set field for field.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, Iterator, Sequence

from claimcheck.errors import ExportError, InvalidInputError
from claimcheck.feedback.records import (
    IRRELEVANT,
    MISLEADING,
    TrustedAnnotation,
    annotation_from_record,
)
from claimcheck.feedback.store import FeedbackStore
from claimcheck.model.corpus import TrainingInstance


@dataclass(frozen=True)
class SidecarRecord:
    """A misleading or irrelevant judgment preserved alongside training rows."""

    record_id: str
    category: str
    claim_text: str
    tokens: tuple[str, ...]
    shown_label: str
    created_at: float


def export_rows(
    store: FeedbackStore,
    categories: Iterable[str] | None = None,
    since: float | None = None,
) -> list[dict]:
    """Snapshot the store into export rows, optionally filtered.

    ``categories`` limits which feedback categories are considered; ``since``
    excludes records created before the given timestamp.
    """
    wanted = None if categories is None else set(categories)
    rows: list[dict] = []
    for record in store.records():
        if wanted is not None and record.category not in wanted:
            continue
        if since is not None and record.created_at < since:
            continue
        annotation = annotation_from_record(record)
        if annotation is not None:
            rows.append(
                {
                    "claim": annotation.claim_text.split(),
                    "document": list(annotation.tokens),
                    "label": annotation.label,
                    "mask": list(annotation.mask),
                    "provenance": annotation.provenance,
                    "record_id": annotation.record_id,
                    "created_at": annotation.created_at,
                }
            )
        else:
            rows.append(
                {
                    "category": record.category,
                    "claim": record.claim_text.split(),
                    "document": list(record.window_tokens),
                    "shown_label": record.shown_label,
                    "record_id": record.record_id,
                    "created_at": record.created_at,
                }
            )
    return rows


def iter_export_lines(rows: Iterable[dict]) -> Iterator[str]:
    for row in rows:
        yield json.dumps(row) + "\n"


def write_export(rows: Iterable[dict], target: str | Path | IO[str]) -> int:
    """Write rows as line-delimited JSON; returns the row count."""
    rows = list(rows)
    try:
        if hasattr(target, "write"):
            for line in iter_export_lines(rows):
                target.write(line)
        else:
            with Path(target).open("w", encoding="utf-8") as fh:
                for line in iter_export_lines(rows):
                    fh.write(line)
    except OSError as exc:
        raise ExportError(f"export failed: {exc}") from exc
    return len(rows)


def load_export(source: str | Path | IO[str]) -> list[dict]:
    try:
        if hasattr(source, "read"):
            text = source.read()
        else:
            text = Path(source).read_text(encoding="utf-8")
    except OSError as exc:
        raise ExportError(f"cannot read export: {exc}") from exc
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            rows.append(json.loads(line))
        except json.JSONDecodeError as exc:
            raise InvalidInputError(f"export line {lineno}: invalid JSON: {exc}") from exc
    return rows


def split_rows(rows: Iterable[dict]) -> tuple[list[TrustedAnnotation], list[SidecarRecord]]:
    """Rebuild annotations and sidecar records from export rows."""
    annotations: list[TrustedAnnotation] = []
    sidecar: list[SidecarRecord] = []
    for row in rows:
        if "provenance" in row:
            annotations.append(
                TrustedAnnotation(
                    claim_text=" ".join(row["claim"]),
                    tokens=tuple(row["document"]),
                    label=row["label"],
                    mask=tuple(row["mask"]),
                    provenance=row["provenance"],
                    record_id=row["record_id"],
                    created_at=row["created_at"],
                )
            )
        elif row.get("category") in (MISLEADING, IRRELEVANT):
            sidecar.append(
                SidecarRecord(
                    record_id=row["record_id"],
                    category=row["category"],
                    claim_text=" ".join(row["claim"]),
                    tokens=tuple(row["document"]),
                    shown_label=row["shown_label"],
                    created_at=row["created_at"],
                )
            )
        else:
            raise InvalidInputError(f"unrecognizable export row: {sorted(row)}")
    return annotations, sidecar


def training_instances(rows: Iterable[dict]) -> list[TrainingInstance]:
    """The trainable subset of an export, in corpus schema."""
    annotations, _ = split_rows(rows)
    return [
        TrainingInstance.make(a.claim_text.split(), a.tokens, a.label, a.mask)
        for a in annotations
    ]
