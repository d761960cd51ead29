"""Explainable claim verification with a human correction loop.

The package is organized around five parts:

- ``claimcheck.model``: the two-phase explain-then-predict verifier
  (multi-task rationale extraction, then classification on wildcard-masked
  documents).
- ``claimcheck.retrieval``: claim preprocessing, provider-backed search,
  content fetching, sentence segmentation, and document windowing.
- ``claimcheck.service``: end-to-end claim checking sessions, per-document
  verdicts, and evidence snippets.
- ``claimcheck.feedback``: append-only storage of user judgments and export
  of trusted annotations as training data.
- ``claimcheck.api``: the HTTP surface and CLI wired on top of the above.
"""

__version__ = "0.1.0"

SUPPORTS = "SUPPORTS"
REFUTES = "REFUTES"
LABELS = (SUPPORTS, REFUTES)
