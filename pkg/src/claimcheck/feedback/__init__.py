"""User feedback capture, append-only persistence, export, fine-tuning."""

from claimcheck.feedback.export import (
    SidecarRecord,
    export_rows,
    iter_export_lines,
    load_export,
    split_rows,
    training_instances,
    write_export,
)
from claimcheck.feedback.finetune import fine_tune
from claimcheck.feedback.records import (
    AGREED,
    CATEGORIES,
    CORRECTED_EVIDENCE,
    HUMAN_CORRECTED,
    IRRELEVANT,
    MACHINE_AGREED,
    MISLEADING,
    FeedbackRecord,
    TrustedAnnotation,
    annotation_from_record,
    trusted_annotations,
)
from claimcheck.feedback.store import FeedbackStore

__all__ = [
    "AGREED",
    "CATEGORIES",
    "CORRECTED_EVIDENCE",
    "FeedbackRecord",
    "FeedbackStore",
    "HUMAN_CORRECTED",
    "IRRELEVANT",
    "MACHINE_AGREED",
    "MISLEADING",
    "SidecarRecord",
    "TrustedAnnotation",
    "annotation_from_record",
    "export_rows",
    "fine_tune",
    "iter_export_lines",
    "load_export",
    "split_rows",
    "training_instances",
    "trusted_annotations",
    "write_export",
]
