"""Tests for naive Bayes and k-nearest neighbours."""

import numpy as np
import pytest

from asdbench.exceptions import TrainingError
from asdbench.models.classifier_model import KnnSpec, NaiveBayesSpec
from asdbench.services.classifiers import fit_knn, fit_naive_bayes, predict
from asdbench.services.classifiers.naive_bayes_classifier import binary_columns


class TestNaiveBayes:
    """Test suite for fit_naive_bayes."""

    @pytest.fixture
    def data(self, dataset_of):
        # column 0 is a 0/1 score, column 1 a numeric age
        return dataset_of(
            [[1, 30], [1, 25], [1, 41], [0, 37], [0, 20], [0, 22], [0, 19], [1, 24]],
            [1, 1, 1, 1, 0, 0, 0, 0],
        )

    def test_laplace_smoothing(self, data):
        """Test 3 of 4 YES rows with f=1 and alpha=1 gives 4/6."""
        model = fit_naive_bayes(data, NaiveBayesSpec(alpha=1.0))

        assert model.bernoulli_p[1, 0] == pytest.approx(4 / 6)
        assert model.bernoulli_p[0, 0] == pytest.approx(2 / 6)

    def test_balanced_priors(self, data):
        """Test balanced classes give prior 0.5."""
        model = fit_naive_bayes(data, NaiveBayesSpec())

        assert model.priors.tolist() == [0.5, 0.5]

    def test_column_kinds(self, data):
        """Test 0/1 columns are Bernoulli and the rest Gaussian."""
        model = fit_naive_bayes(data, NaiveBayesSpec())

        assert model.bernoulli_mask.tolist() == [True, False]
        assert model.gauss_mean[1, 1] == pytest.approx(33.25)

    def test_scores_are_posteriors(self, data):
        """Test scores match a direct Bayes-rule computation."""
        model = fit_naive_bayes(data, NaiveBayesSpec())
        x = np.array([1.0, 28.0])

        def likelihood(c: int) -> float:
            p = model.bernoulli_p[c, 0]
            mean, var = model.gauss_mean[c, 1], model.gauss_var[c, 1]
            gauss = np.exp(-((x[1] - mean) ** 2) / (2 * var)) / np.sqrt(2 * np.pi * var)
            return 0.5 * p * gauss

        expected = likelihood(1) / (likelihood(0) + likelihood(1))

        assert predict(model, x).score == pytest.approx(expected)

    def test_probabilities_inside_unit_interval(self, dataset_of):
        """Test a column constant within each class keeps probabilities inside (0, 1)."""
        model = fit_naive_bayes(dataset_of([[1], [1], [0], [0]], [1, 1, 0, 0]), NaiveBayesSpec())

        assert model.bernoulli_p[:, 0].tolist() == pytest.approx([1 / 4, 3 / 4])

        assert np.all((model.bernoulli_p > 0.0) & (model.bernoulli_p < 1.0))

    def test_constant_column_uses_variance_floor(self, dataset_of):
        """Test a constant numeric column keeps a positive variance."""
        model = fit_naive_bayes(dataset_of([[5.0], [5.0], [5.0], [5.0]], [0, 1, 0, 1]), NaiveBayesSpec())

        assert np.all(model.gauss_var >= 1e-9)
        assert np.all(np.isfinite(model.scores(np.array([[5.0], [6.0]]))))

    def test_single_class_rejected(self, dataset_of):
        """Test one-class training data is a TrainingError."""
        with pytest.raises(TrainingError, match="only class YES"):
            fit_naive_bayes(dataset_of([[1.0], [0.0]], [1, 1]), NaiveBayesSpec())

    def test_binary_columns(self):
        """Test the Bernoulli mask detects 0/1 columns."""
        X = np.array([[0.0, 0.5, 1.0], [1.0, 1.0, 1.0]])

        assert binary_columns(X).tolist() == [True, False, True]


class TestKnn:
    """Test suite for fit_knn."""

    def test_one_neighbour_returns_training_label(self, separable_dataset):
        """Test k=1 on a training point returns that point's label."""
        model = fit_knn(separable_dataset, KnnSpec(k=1))

        prediction = predict(model, separable_dataset.features[25])

        assert prediction.label == 1
        assert prediction.score == 1.0

    def test_majority_of_three(self, dataset_of):
        """Test neighbours {1, 1, 0} give label 1 and score 2/3."""
        data = dataset_of([[0.0], [0.1], [0.2], [5.0]], [1, 1, 0, 0])
        model = fit_knn(data, KnnSpec(k=3))

        prediction = predict(model, np.array([0.05]))

        assert prediction.label == 1
        assert prediction.score == pytest.approx(2 / 3)

    def test_distance_ties_prefer_lower_index(self, dataset_of):
        """Test equidistant neighbours resolve to the earlier row."""
        data = dataset_of([[1.0], [-1.0], [3.0]], [1, 0, 0])
        model = fit_knn(data, KnnSpec(k=1))

        assert model.neighbours(np.array([0.0])).tolist() == [0]
        assert predict(model, np.array([0.0])).label == 1

    def test_k_larger_than_training_set(self, dataset_of):
        """Test k=5 on four rows is rejected."""
        data = dataset_of([[0.0], [1.0], [2.0], [3.0]], [0, 1, 0, 1])

        with pytest.raises(TrainingError, match="k=5 exceeds the 4 training rows"):
            fit_knn(data, KnnSpec(k=5))

    def test_dimension_mismatch(self, separable_dataset):
        """Test a query of the wrong width is rejected."""
        model = fit_knn(separable_dataset, KnnSpec())

        with pytest.raises(TrainingError, match="expects 2 features"):
            predict(model, np.array([1.0, 2.0, 3.0]))
