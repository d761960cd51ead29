"""End-to-end checks with a real trained model over the bundled fixture pages.

The claim "Microsoft is a Chinese company" retrieves three pages; the page
about the company itself describes it as American, so the model should
refute the claim there and point at the nationality phrase in the lead.
"""

import json

import pytest
from fastapi.testclient import TestClient

from claimcheck import REFUTES, SUPPORTS
from claimcheck.api import create_app
from claimcheck.feedback import FeedbackStore, load_export
from claimcheck.retrieval import FixtureProvider
from claimcheck.service import ClaimChecker, SessionStore, display_segments

from conftest import FIXTURE_PAGES

CLAIM = "Microsoft is a Chinese company"
LEAD_EVIDENCE = {3, 4, 5, 6}  # "an American multinational company"


@pytest.fixture(scope="module")
def e2e_session(nationality_model):
    provider = FixtureProvider(FIXTURE_PAGES)
    store = SessionStore()
    checker = ClaimChecker(nationality_model, provider, provider, store)
    session = checker.check_claim(CLAIM)
    return checker, store, session


class TestClaimAgainstFixtures:
    def test_three_verdicts_in_rank_order(self, e2e_session):
        _, store, session = e2e_session
        verdicts = store.session_verdicts(session.session_id)
        assert [v.page_id for v in verdicts] == [
            "companies-of-china",
            "chinese-cuisine",
            "microsoft",
        ]
        assert session.warnings == ()

    def test_microsoft_page_is_refuted(self, e2e_session):
        _, store, session = e2e_session
        verdict = store.session_verdicts(session.session_id)[2]
        assert verdict.label == REFUTES
        assert verdict.label_probs[REFUTES] > verdict.label_probs[SUPPORTS]

    def test_evidence_overlaps_nationality_phrase(self, e2e_session):
        _, store, session = e2e_session
        verdict = store.session_verdicts(session.session_id)[2]
        predicted = {i for i, bit in enumerate(verdict.evidence_mask) if bit}
        assert predicted, "no evidence tokens predicted at all"
        assert predicted & LEAD_EVIDENCE

    def test_snippet_mirrors_mask_and_shows_lead(self, e2e_session):
        _, store, session = e2e_session
        verdict = store.session_verdicts(session.session_id)[2]
        lead = verdict.lead
        for i, tok in enumerate(verdict.snippet):
            assert tok.highlighted == bool(verdict.evidence_mask[i])
            if i < lead:
                assert tok.visible
        segments = display_segments(verdict.snippet)
        assert segments[0] == "Microsoft"
        assert "American" in segments

    def test_rerun_is_deterministic(self, e2e_session):
        checker, store, session = e2e_session
        repeat = checker.check_claim(CLAIM)
        old = store.session_verdicts(session.session_id)
        new = store.session_verdicts(repeat.session_id)
        assert [v.label for v in new] == [v.label for v in old]
        assert [v.evidence_mask for v in new] == [v.evidence_mask for v in old]


class TestFullLoopOverHttp:
    def test_check_feedback_export(self, nationality_model, tmp_path):
        provider = FixtureProvider(FIXTURE_PAGES)
        sessions = SessionStore(tmp_path / "sessions.jsonl")
        checker = ClaimChecker(nationality_model, provider, provider, sessions)
        feedback = FeedbackStore(tmp_path / "feedback.jsonl", sessions)
        client = TestClient(create_app(checker, feedback))

        body = client.post("/claims", json={"claim": CLAIM}).json()
        verdict = body["verdicts"][2]
        assert verdict["label"] == REFUTES

        posted = client.post(
            f"/verdicts/{verdict['verdict_id']}/feedback",
            json={"agree": True, "user_id": "reviewer"},
        )
        assert posted.status_code == 200

        lines = client.get("/export").text.splitlines()
        rows = [json.loads(line) for line in lines if line]
        assert len(rows) == 1
        row = rows[0]
        assert row["provenance"] == "machine-agreed"
        assert row["label"] == REFUTES
        assert row["mask"] == verdict["mask"]
        assert row["document"] == verdict["tokens"]
        assert row["claim"] == CLAIM.lower().split()

        # the exported rows parse back through the import path
        export_file = tmp_path / "roundtrip.jsonl"
        export_file.write_text("\n".join(lines) + "\n")
        assert len(load_export(export_file)) == 1
