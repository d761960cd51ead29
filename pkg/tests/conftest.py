"""Shared fixtures: synthetic corpora and session-scoped trained models.

Training is deterministic, so the models built here are identical on every
run; they are trained once per session because the nationality model takes
around a minute on a laptop CPU.
"""

from pathlib import Path

import pytest

from claimcheck import REFUTES, SUPPORTS
from claimcheck.model.config import ModelConfig
from claimcheck.model.corpus import keyword_corpus, nationality_corpus
from claimcheck.model.pipeline import PipelinePrediction, TwoPhaseModel
from claimcheck.retrieval import FixtureProvider
from claimcheck.service import ClaimChecker, SessionStore

FIXTURE_PAGES = Path(__file__).parent / "fixtures" / "pages"

KEYWORD_CONFIG = ModelConfig(
    max_length=32,
    embed_dim=32,
    num_layers=2,
    num_heads=4,
    ff_dim=64,
    epochs=6,
    learning_rate=2e-3,
    batch_size=32,
    seed=0,
)

# The nationality task needs enough data to learn the claim/document
# agreement rule instead of memorizing pairs.
NATIONALITY_CONFIG = ModelConfig(
    max_length=128,
    embed_dim=48,
    num_layers=2,
    num_heads=4,
    ff_dim=96,
    epochs=16,
    learning_rate=2e-3,
    batch_size=32,
    seed=0,
    vocab_min_count=2,
)

NATIONALITY_TRAIN_SIZE = 3000


@pytest.fixture(scope="session")
def keyword_train():
    return keyword_corpus(500, seed=1)


@pytest.fixture(scope="session")
def keyword_test():
    return keyword_corpus(200, seed=2)


@pytest.fixture(scope="session")
def keyword_config():
    return KEYWORD_CONFIG


@pytest.fixture(scope="session")
def keyword_model(keyword_train, keyword_config):
    return TwoPhaseModel.train(keyword_train, keyword_config)


@pytest.fixture(scope="session")
def nationality_config():
    return NATIONALITY_CONFIG


@pytest.fixture(scope="session")
def nationality_model(nationality_config):
    train = nationality_corpus(NATIONALITY_TRAIN_SIZE, seed=11)
    return TwoPhaseModel.train(train, nationality_config)


class StubNationalityModel:
    """Cheap stand-in: nationality adjectives are the evidence, and any
    document nationality different from the claimed one refutes the claim."""

    NATIONALITIES = {"american", "chinese", "french", "british", "german"}

    def predict(self, claim, document):
        claimed = {t.lower() for t in claim} & self.NATIONALITIES
        mask = []
        refutes = False
        for token in document:
            word = token.lower().strip(".,()")
            hit = word in self.NATIONALITIES
            mask.append(1 if hit else 0)
            if hit and claimed and word not in claimed:
                refutes = True
        label = REFUTES if refutes else SUPPORTS
        probs = {SUPPORTS: 0.9, REFUTES: 0.1} if label == SUPPORTS else {SUPPORTS: 0.1, REFUTES: 0.9}
        return PipelinePrediction(
            label=label, label_probs=probs, evidence_mask=mask, truncated=False
        )


@pytest.fixture()
def stub_checker():
    """ClaimChecker over the fixture pages with the stub model, all in memory."""
    provider = FixtureProvider(FIXTURE_PAGES)
    return ClaimChecker(StubNationalityModel(), provider, provider, SessionStore())
