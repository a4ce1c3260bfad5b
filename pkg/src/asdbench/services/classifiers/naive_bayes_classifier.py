"""Naive Bayes with Bernoulli likelihoods on 0/1 columns and Gaussians elsewhere."""

import numpy as np

from asdbench.models.classifier_model import NaiveBayesSpec
from asdbench.models.table_model import Dataset
from asdbench.models.trained_model import NaiveBayesModel

from ._training_checks import require_both_classes


VARIANCE_FLOOR = 1e-9


def binary_columns(X: np.ndarray) -> np.ndarray:
    """Mask of columns whose values are all 0 or 1."""
    return np.all((X == 0.0) | (X == 1.0), axis=0)


def fit_naive_bayes(train: Dataset, spec: NaiveBayesSpec) -> NaiveBayesModel:
    """Fit priors and per-class likelihood tables.

    Bernoulli: ``P(f=1 | c) = (count + alpha) / (n_c + 2 * alpha)``.
    Gaussian: class mean and population variance floored at ``1e-9``.
    """
    require_both_classes(train, "naive Bayes")
    X, y = train.features, train.labels
    d = train.n_features
    mask = binary_columns(X)

    priors = np.empty(2)
    bernoulli_p = np.full((2, d), 0.5)
    gauss_mean = np.zeros((2, d))
    gauss_var = np.ones((2, d))
    for c in (0, 1):
        rows = X[y == c]
        n_c = rows.shape[0]
        priors[c] = n_c / train.n_samples
        counts = rows[:, mask].sum(axis=0)
        bernoulli_p[c, mask] = (counts + spec.alpha) / (n_c + 2.0 * spec.alpha)
        gauss_mean[c] = rows.mean(axis=0)
        gauss_var[c] = np.maximum(rows.var(axis=0), VARIANCE_FLOOR)

    return NaiveBayesModel(
        n_features=d,
        spec=spec,
        priors=priors,
        bernoulli_mask=mask,
        bernoulli_p=bernoulli_p,
        gauss_mean=gauss_mean,
        gauss_var=gauss_var,
    )
