"""L2-regularized logistic regression by full-batch gradient descent."""

import logging

import numpy as np

from asdbench.helpers.numeric_helper import cross_entropy_from_logits, sigmoid
from asdbench.models.classifier_model import LogisticSpec
from asdbench.models.table_model import Dataset
from asdbench.models.trained_model import LogisticModel

from ._training_checks import require_finite, require_rows


logger = logging.getLogger(__name__)


def logistic_loss_and_gradient(
    weights: np.ndarray, bias: float, X: np.ndarray, y: np.ndarray, l2_lambda: float
) -> tuple[float, np.ndarray, float]:
    """Mean cross-entropy plus ``l2_lambda / 2 * ||w||**2`` and its gradient.

    Returns:
        ``(loss, d_loss/d_weights, d_loss/d_bias)``.
    """
    logits = X @ weights + bias
    loss = cross_entropy_from_logits(logits, y) + 0.5 * l2_lambda * float(weights @ weights)
    error = (sigmoid(logits) - y) / X.shape[0]
    return loss, X.T @ error + l2_lambda * weights, float(error.sum())


def fit_logistic(train: Dataset, spec: LogisticSpec) -> LogisticModel:
    """Gradient descent from ``w = 0, b = 0``.

    Stops after ``max_iters`` steps or when the gradient's max-norm drops
    below ``grad_tol``.

    Raises:
        TrainingError: The loss becomes non-finite.
    """
    require_rows(train, "logistic regression")
    X = train.features
    y = train.labels.astype(np.float64)
    weights = np.zeros(train.n_features)
    bias = 0.0

    iterations = 0
    converged = False
    for iterations in range(spec.max_iters + 1):
        loss, grad_w, grad_b = logistic_loss_and_gradient(weights, bias, X, y, spec.l2_lambda)
        require_finite(loss, "logistic regression", iterations)
        grad_norm = max(float(np.max(np.abs(grad_w), initial=0.0)), abs(grad_b))
        converged = grad_norm < spec.grad_tol
        if converged or iterations == spec.max_iters:
            break
        weights = weights - spec.learning_rate * grad_w
        bias -= spec.learning_rate * grad_b
        if (iterations + 1) % 500 == 0:
            logger.debug("Logistic step %d: loss %.6f, |grad| %.2e", iterations + 1, loss, grad_norm)

    if not converged and spec.max_iters > 0:
        logger.debug("Logistic regression stopped at max_iters=%d", spec.max_iters)
    return LogisticModel(
        n_features=train.n_features,
        spec=spec,
        weights=weights,
        bias=float(bias),
        iterations=iterations,
    )
