"""Training instance validation, corpus I/O, and synthetic generators."""

import pytest

from claimcheck import LABELS, REFUTES, SUPPORTS
from claimcheck.errors import InvalidInputError
from claimcheck.model.corpus import (
    TrainingInstance,
    keyword_corpus,
    load_corpus,
    nationality_corpus,
    save_corpus,
)


class TestTrainingInstance:
    def test_mask_length_must_match_document(self):
        with pytest.raises(InvalidInputError):
            TrainingInstance.make(["c"], ["a", "b"], SUPPORTS, [1])

    def test_unknown_label_rejected(self):
        with pytest.raises(InvalidInputError):
            TrainingInstance.make(["c"], ["a"], "MAYBE", [0])

    def test_reserved_marker_rejected(self):
        with pytest.raises(InvalidInputError):
            TrainingInstance.make(["[CLS]"], ["a"], SUPPORTS, [0])

    def test_round_trip_dict(self):
        inst = TrainingInstance.make(["c"], ["a", "b"], REFUTES, [0, 1])
        assert TrainingInstance.from_dict(inst.to_dict()) == inst


class TestCorpusIO:
    def test_save_load_round_trip(self, tmp_path):
        instances = keyword_corpus(25, seed=3)
        path = tmp_path / "corpus.jsonl"
        assert save_corpus(instances, path) == 25
        assert load_corpus(path) == instances

    def test_extra_fields_ignored(self, tmp_path):
        path = tmp_path / "corpus.jsonl"
        path.write_text(
            '{"claim": ["c"], "document": ["d"], "label": "SUPPORTS", "mask": [1], '
            '"provenance": "human-corrected"}\n'
        )
        [inst] = load_corpus(path)
        assert inst.gold_label == SUPPORTS

    def test_missing_field_rejected(self, tmp_path):
        path = tmp_path / "corpus.jsonl"
        path.write_text('{"claim": ["c"], "document": ["d"]}\n')
        with pytest.raises(InvalidInputError):
            load_corpus(path)

    def test_bad_json_rejected(self, tmp_path):
        path = tmp_path / "corpus.jsonl"
        path.write_text("not json\n")
        with pytest.raises(InvalidInputError):
            load_corpus(path)


class TestKeywordCorpus:
    def test_label_follows_cue(self):
        for inst in keyword_corpus(200, seed=7):
            assert (inst.gold_label == REFUTES) == ("not" in inst.document)
            cue = "not" if inst.gold_label == REFUTES else "indeed"
            assert sum(inst.gold_mask) == 1
            assert inst.document[inst.gold_mask.index(1)] == cue

    def test_deterministic_given_seed(self):
        assert keyword_corpus(50, seed=9) == keyword_corpus(50, seed=9)
        assert keyword_corpus(50, seed=9) != keyword_corpus(50, seed=10)


class TestNationalityCorpus:
    def test_label_follows_nationality_agreement(self):
        for inst in nationality_corpus(200, seed=7):
            claimed = inst.claim[3]
            evidence = [tok for tok, bit in zip(inst.document, inst.gold_mask) if bit]
            assert len(evidence) == 4
            assert evidence[0] == "an"
            actual = evidence[1]
            expected = SUPPORTS if claimed == actual else REFUTES
            assert inst.gold_label == expected

    def test_labels_roughly_balanced(self):
        labels = [inst.gold_label for inst in nationality_corpus(500, seed=1)]
        for label in LABELS:
            assert labels.count(label) > 150
