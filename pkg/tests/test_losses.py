"""Loss definitions against hand-derived oracle values."""

import math

import pytest
import torch
from hypothesis import given
from hypothesis import strategies as st

from claimcheck.errors import InvalidConfigError, InvalidInputError
from claimcheck.model.losses import explanation_loss, label_loss, total_loss
from claimcheck.model.network import balanced_explanation_loss

# Hand oracle: one evidence token at p=0.9 and one non-evidence token at
# p=0.1 each contribute -ln(0.9) after per-class averaging.
TWO_TOKEN_ORACLE = 0.21072103131565256


class TestExplanationLoss:
    def test_perfect_prediction_is_zero(self):
        assert explanation_loss([1.0, 0.0], [1, 0]) == pytest.approx(0.0, abs=1e-6)

    def test_hand_oracle(self):
        assert explanation_loss([0.9, 0.1], [1, 0]) == pytest.approx(
            TWO_TOKEN_ORACLE, abs=1e-4
        )

    def test_per_class_averaging_ignores_class_size(self):
        # three identical non-evidence tokens average back to one
        assert explanation_loss([0.9, 0.1, 0.1, 0.1], [1, 0, 0, 0]) == pytest.approx(
            TWO_TOKEN_ORACLE, abs=1e-4
        )

    @pytest.mark.parametrize("n", [1, 7, 100])
    def test_duplicating_non_evidence_leaves_loss_constant(self, n):
        base = explanation_loss([0.9], [1])
        padded = explanation_loss([0.9] + [0.1] * n, [1] + [0] * n)
        assert padded == pytest.approx(base + (-math.log(0.9)), abs=1e-9)

    def test_degenerate_all_ones_gold(self):
        # no non-evidence tokens: that class term is defined as 0
        assert explanation_loss([0.9, 0.8], [1, 1]) == pytest.approx(
            (-math.log(0.9) - math.log(0.8)) / 2, abs=1e-9
        )

    def test_degenerate_all_zeros_gold(self):
        assert explanation_loss([0.1], [0]) == pytest.approx(-math.log(0.9), abs=1e-9)

    def test_length_mismatch_rejected(self):
        with pytest.raises(InvalidInputError):
            explanation_loss([0.5, 0.5], [1])

    def test_extreme_probabilities_are_clamped(self):
        # defined (finite) even at exact 0/1 predictions against the wrong class
        loss = explanation_loss([0.0, 1.0], [1, 0])
        assert math.isfinite(loss) and loss > 10

    @given(
        st.lists(
            st.tuples(st.floats(0.0, 1.0), st.integers(0, 1)), min_size=1, max_size=40
        )
    )
    def test_matches_tensor_twin(self, pairs):
        probs = [p for p, _ in pairs]
        gold = [g for _, g in pairs]
        reference = explanation_loss(probs, gold)
        twin = balanced_explanation_loss(
            torch.tensor([probs], dtype=torch.float64),
            torch.tensor([gold]),
            torch.ones((1, len(gold)), dtype=torch.bool),
        )
        assert float(twin[0]) == pytest.approx(reference, rel=1e-9, abs=1e-9)


class TestTotalLoss:
    def test_lambda_zero_reduces_to_task_loss(self):
        assert total_loss(0.5, 0.2, 0.0).total == 0.5

    def test_linear_combination(self):
        breakdown = total_loss(0.5, 0.2, 1.0)
        assert breakdown.total == pytest.approx(0.7, abs=1e-12)
        assert breakdown.task_loss == 0.5
        assert breakdown.exp_loss == 0.2
        assert breakdown.lam == 1.0

    def test_zero_case(self):
        assert total_loss(0.0, 0.0, 5.0).total == 0.0

    def test_negative_lambda_rejected(self):
        with pytest.raises(InvalidConfigError):
            total_loss(0.1, 0.1, -1.0)

    def test_negative_loss_rejected(self):
        with pytest.raises(InvalidInputError):
            total_loss(-0.1, 0.0, 1.0)

    @given(
        st.floats(0, 10),
        st.floats(0, 10),
        st.floats(0, 10),
    )
    def test_linearity_in_exp_loss(self, task, exp, lam):
        with_exp = total_loss(task, exp, lam).total
        without = total_loss(task, 0.0, lam).total
        assert with_exp - without == pytest.approx(lam * exp, abs=1e-9)


class TestLabelLoss:
    def test_confident_correct_label(self):
        assert label_loss([0.9, 0.1], 0) == pytest.approx(-math.log(0.9), abs=1e-9)

    def test_out_of_range_index(self):
        with pytest.raises(InvalidInputError):
            label_loss([0.5, 0.5], 2)
