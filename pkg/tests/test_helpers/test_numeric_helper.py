"""Tests for the stable scalar functions."""

import numpy as np
import pytest

from asdbench.helpers.numeric_helper import (
    cross_entropy_from_logits,
    log1pexp,
    sigmoid,
)


class TestSigmoid:
    """Test suite for sigmoid."""

    def test_known_values(self):
        """Test sigmoid(0) = 0.5 and symmetry."""
        values = sigmoid(np.array([-2.0, 0.0, 2.0]))

        assert values[1] == 0.5
        assert values[0] + values[2] == pytest.approx(1.0)

    def test_extremes_do_not_overflow(self):
        """Test large magnitudes saturate without warnings."""
        with np.errstate(over="raise"):
            values = sigmoid(np.array([-1000.0, 1000.0]))

        assert values.tolist() == [0.0, 1.0]

    def test_scalar_shape_preserved(self):
        """Test a scalar input gives a 0-d result."""
        assert sigmoid(0.0).shape == ()


class TestCrossEntropy:
    """Test suite for the logistic loss helpers."""

    def test_log1pexp_large(self):
        """Test log(1 + e^z) ~ z for large z."""
        assert log1pexp(np.array([800.0]))[0] == pytest.approx(800.0)

    def test_matches_direct_formula(self):
        """Test the logit form equals -[y log p + (1-y) log(1-p)]."""
        logits = np.array([-1.5, 0.2, 3.0])
        y = np.array([0.0, 1.0, 1.0])
        p = 1.0 / (1.0 + np.exp(-logits))
        direct = -np.mean(y * np.log(p) + (1 - y) * np.log(1 - p))

        assert cross_entropy_from_logits(logits, y) == pytest.approx(direct)

