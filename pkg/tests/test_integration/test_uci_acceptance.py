"""Benchmark checks on the three public screening ARFF files.

Skipped unless ``ASDBENCH_UCI_DIR`` names a directory holding the child,
adolescent and adult files.
"""

import os
from pathlib import Path

import pytest

from asdbench.config import parse_config
from asdbench.services.experiment_service import run_experiment


UCI_DIR = os.environ.get("ASDBENCH_UCI_DIR")

pytestmark = [
    pytest.mark.slow,
    pytest.mark.integration,
    pytest.mark.skipif(not UCI_DIR, reason="ASDBENCH_UCI_DIR is not set"),
]


@pytest.fixture(scope="module")
def bundle():
    files = sorted(Path(UCI_DIR).glob("*.arff"))  # type: ignore[arg-type]
    assert len(files) == 3, f"expected three ARFF files in {UCI_DIR}, found {len(files)}"
    config = parse_config(
        {
            "data": [str(path) for path in files],
            "seed": 0,
            "repeat": 10,
            "classifiers": [
                {"kind": "naive_bayes"},
                {"kind": "knn"},
                {"kind": "logistic"},
                {"kind": "gradient_boost"},
                {"kind": "svm"},
            ],
        }
    )
    return run_experiment(config)


def _mean_accuracy(bundle, section: str) -> dict[str, float]:
    return {name: stats["accuracy"].mean for name, stats in bundle.summary(section).items()}


class TestKernelSweep:
    """Mean accuracies of the SVM kernel sweep over ten seeds."""

    def test_gaussian_leads(self, bundle):
        """Test Gaussian >= Polynomial > Sigmoid."""
        acc = _mean_accuracy(bundle, "kernels")

        assert acc["Gaussian"] >= acc["Polynomial"] > acc["Sigmoid"]

    def test_gaussian_accuracy(self, bundle):
        """Test the Gaussian kernel reaches 0.90."""
        assert _mean_accuracy(bundle, "kernels")["Gaussian"] >= 0.90

    def test_sigmoid_accuracy(self, bundle):
        """Test the sigmoid kernel stays at or below 0.65."""
        assert _mean_accuracy(bundle, "kernels")["Sigmoid"] <= 0.65


class TestClassifierSpread:
    """Mean accuracies of the classifier comparison over ten seeds."""

    def test_naive_bayes_is_lowest(self, bundle):
        """Test NB is strictly below every other learner."""
        acc = _mean_accuracy(bundle, "classifiers")

        assert all(acc["NB"] < value for name, value in acc.items() if name != "NB")

    def test_svm_gap(self, bundle):
        """Test the RBF SVM beats NB by at least 0.05."""
        acc = _mean_accuracy(bundle, "classifiers")

        assert acc["SVM"] - acc["NB"] >= 0.05

    def test_cleaning_keeps_most_rows(self, bundle):
        """Test cleaning leaves roughly 1100 complete rows."""
        metadata = bundle.metadata

        assert metadata.rows_used + metadata.rows_dropped == metadata.rows_parsed
        assert 1000 <= metadata.rows_used <= metadata.rows_parsed
