"""Training instances, corpus I/O, and synthetic corpus generators.

Corpora are line-delimited JSON, one instance per line:

    {"claim": [...], "document": [...], "label": "SUPPORTS", "mask": [0, 1, ...]}

The feedback export uses the same schema, so exported annotations can be fed
straight back into training. Extra keys (e.g. ``provenance``) are ignored on
load.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

from claimcheck import LABELS, REFUTES, SUPPORTS
from claimcheck.errors import InvalidInputError
from claimcheck.model.encoding import validate_tokens
from claimcheck.model.masking import validate_mask


@dataclass(frozen=True)
class TrainingInstance:
    """One supervised example: claim, document, gold label, gold rationale."""

    claim: tuple[str, ...]
    document: tuple[str, ...]
    gold_label: str
    gold_mask: tuple[int, ...]

    def __post_init__(self):
        validate_tokens(self.claim, "claim")
        validate_tokens(self.document, "document")
        if self.gold_label not in LABELS:
            raise InvalidInputError(f"unknown label {self.gold_label!r}")
        validate_mask(self.gold_mask, doc_len=len(self.document))

    @classmethod
    def make(cls, claim, document, gold_label, gold_mask) -> "TrainingInstance":
        return cls(tuple(claim), tuple(document), gold_label, tuple(gold_mask))

    def to_dict(self) -> dict:
        return {
            "claim": list(self.claim),
            "document": list(self.document),
            "label": self.gold_label,
            "mask": list(self.gold_mask),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "TrainingInstance":
        try:
            return cls.make(data["claim"], data["document"], data["label"], data["mask"])
        except KeyError as exc:
            raise InvalidInputError(f"corpus record missing field {exc}") from exc


def save_corpus(instances: Iterable[TrainingInstance], path: str | Path) -> int:
    path = Path(path)
    count = 0
    with path.open("w", encoding="utf-8") as fh:
        for inst in instances:
            fh.write(json.dumps(inst.to_dict()) + "\n")
            count += 1
    return count


def load_corpus(path: str | Path) -> list[TrainingInstance]:
    path = Path(path)
    instances = []
    with path.open("r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                data = json.loads(line)
            except json.JSONDecodeError as exc:
                raise InvalidInputError(f"{path}:{lineno}: invalid JSON: {exc}") from exc
            instances.append(TrainingInstance.from_dict(data))
    return instances


# --- synthetic corpora -------------------------------------------------------

_FILLER = (
    "the quick brown fox jumps over lazy dog near river bank while birds sing "
    "songs under bright blue sky and green trees sway gently in warm summer "
    "breeze carrying sweet scent of wild flowers across open fields"
).split()

_SUPPORT_CUE = "indeed"
_REFUTE_CUE = "not"


def keyword_corpus(n: int, seed: int = 0) -> list[TrainingInstance]:
    """Documents carry exactly one cue token that decides the label.

    The cue ("indeed" for SUPPORTS, "not" for REFUTES) is the only gold
    evidence token, so the label is REFUTES iff the document contains "not"
    and a perfect rationale is exactly the cue position. The mapping is
    separable by construction, which makes this corpus a training oracle.
    """
    rng = random.Random(seed)
    instances = []
    for _ in range(n):
        refutes = rng.random() < 0.5
        cue = _REFUTE_CUE if refutes else _SUPPORT_CUE
        claim = tuple(rng.choices(_FILLER, k=rng.randint(3, 6)))
        doc = [rng.choice(_FILLER) for _ in range(rng.randint(8, 16))]
        pos = rng.randrange(len(doc) + 1)
        doc.insert(pos, cue)
        mask = [0] * len(doc)
        mask[pos] = 1
        instances.append(
            TrainingInstance.make(claim, doc, REFUTES if refutes else SUPPORTS, mask)
        )
    return instances


_ENTITIES = (
    "microsoft contoso acme globex initech cyberdyne novatek wayfarer "
    "stellar quantix verdant meridian"
).split()

_NATIONALITIES = (
    "american chinese french british german japanese indian brazilian"
).split()

_CITIES = "redmond beijing paris london berlin tokyo mumbai recife".split()

_BODY_SENTENCES = [
    "it was founded in 1975 by two college friends .".split(),
    "the company develops software and hardware products .".split(),
    "its products are used by millions of people around the world .".split(),
    "the firm employs thousands of engineers and designers .".split(),
    "its best known product is an operating system .".split(),
    "the business also operates a large cloud computing division .".split(),
    "revenue grew steadily over the last decade .".split(),
    "the company sponsors research in science and education .".split(),
    "its offices are spread across several continents .".split(),
    "analysts consider the firm a leader in its market .".split(),
    "the corporation trades publicly on a major stock exchange .".split(),
    "it acquired several smaller firms in recent years .".split(),
]


def nationality_corpus(n: int, seed: int = 0) -> list[TrainingInstance]:
    """Claims assert a company nationality; documents state the true one.

    The claim has the form ``<entity> is a <nationality> company`` and each
    document contains one lead-style sentence ``<entity> corporation is an
    <nationality> multinational company headquartered in <city> .`` at a
    random position among generic filler sentences. The label is SUPPORTS iff
    the two nationalities agree, and the gold evidence is the ``an
    <nationality> multinational company`` span. A few single-use junk tokens
    are mixed in so that training sees unknown-token noise.
    """
    rng = random.Random(seed)
    instances = []
    for i in range(n):
        entity = rng.choice(_ENTITIES)
        claimed = rng.choice(_NATIONALITIES)
        if rng.random() < 0.5:
            actual = claimed
        else:
            actual = rng.choice([nat for nat in _NATIONALITIES if nat != claimed])
        city = rng.choice(_CITIES)
        claim = (entity, "is", "a", claimed, "company")

        lead = [entity, "corporation", "is", "an", actual, "multinational",
                "company", "headquartered", "in", city, "."]
        evidence_start = 3  # "an <nationality> multinational company"
        evidence_len = 4

        n_body = rng.randint(5, 11)
        body = [rng.choice(_BODY_SENTENCES)[:] for _ in range(n_body)]
        junk_sentence = rng.randrange(n_body)
        junk = body[junk_sentence]
        junk.insert(rng.randrange(len(junk)), f"xq{seed}z{i}")

        lead_at = rng.randint(0, n_body)
        sentences = body[:lead_at] + [lead] + body[lead_at:]
        doc: list[str] = []
        mask: list[int] = []
        for s_idx, sent in enumerate(sentences):
            if s_idx == lead_at:
                sent_mask = [0] * len(sent)
                sent_mask[evidence_start : evidence_start + evidence_len] = [1] * evidence_len
            else:
                sent_mask = [0] * len(sent)
            doc.extend(sent)
            mask.extend(sent_mask)

        label = SUPPORTS if claimed == actual else REFUTES
        instances.append(TrainingInstance.make(claim, doc, label, mask))
    return instances


def iter_labels(instances: Iterable[TrainingInstance]) -> Iterator[str]:
    for inst in instances:
        yield inst.gold_label
