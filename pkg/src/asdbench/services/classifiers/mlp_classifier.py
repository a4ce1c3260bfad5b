"""One-hidden-layer perceptron (ReLU hidden, sigmoid output) trained by backprop."""

import logging
from dataclasses import dataclass

import numpy as np

from asdbench.helpers.numeric_helper import cross_entropy_from_logits, sigmoid
from asdbench.models.classifier_model import MlpSpec
from asdbench.models.table_model import Dataset
from asdbench.models.trained_model import MlpModel

from ._training_checks import require_finite, require_rows


logger = logging.getLogger(__name__)


@dataclass
class MlpParams:
    hidden_weights: np.ndarray
    hidden_bias: np.ndarray
    output_weights: np.ndarray
    output_bias: float

    def step(self, grads: "MlpParams", learning_rate: float) -> "MlpParams":
        return MlpParams(
            hidden_weights=self.hidden_weights - learning_rate * grads.hidden_weights,
            hidden_bias=self.hidden_bias - learning_rate * grads.hidden_bias,
            output_weights=self.output_weights - learning_rate * grads.output_weights,
            output_bias=self.output_bias - learning_rate * grads.output_bias,
        )


def init_params(n_features: int, hidden_units: int, seed: int) -> MlpParams:
    """Hidden weights uniform in ``±sqrt(6 / (d + h))``; everything else zero."""
    limit = np.sqrt(6.0 / (n_features + hidden_units))
    rng = np.random.default_rng(seed)
    return MlpParams(
        hidden_weights=rng.uniform(-limit, limit, size=(n_features, hidden_units)),
        hidden_bias=np.zeros(hidden_units),
        output_weights=np.zeros(hidden_units),
        output_bias=0.0,
    )


def mlp_loss_and_gradients(
    params: MlpParams, X: np.ndarray, y: np.ndarray
) -> tuple[float, MlpParams]:
    """Mean cross-entropy and its gradient with respect to every parameter."""
    pre_activation = X @ params.hidden_weights + params.hidden_bias
    hidden = np.maximum(0.0, pre_activation)
    logits = hidden @ params.output_weights + params.output_bias
    loss = cross_entropy_from_logits(logits, y)

    d_logits = (sigmoid(logits) - y) / X.shape[0]
    d_hidden = np.outer(d_logits, params.output_weights) * (pre_activation > 0.0)
    grads = MlpParams(
        hidden_weights=X.T @ d_hidden,
        hidden_bias=d_hidden.sum(axis=0),
        output_weights=hidden.T @ d_logits,
        output_bias=float(d_logits.sum()),
    )
    return loss, grads


def fit_mlp(train: Dataset, spec: MlpSpec) -> MlpModel:
    """Full-batch gradient descent for ``epochs`` steps from a seeded init.

    Raises:
        TrainingError: The loss becomes non-finite.
    """
    require_rows(train, "MLP")
    X = train.features
    y = train.labels.astype(np.float64)
    params = init_params(train.n_features, spec.hidden_units, spec.init_seed)

    for epoch in range(spec.epochs):
        loss, grads = mlp_loss_and_gradients(params, X, y)
        require_finite(loss, "MLP", epoch)
        params = params.step(grads, spec.learning_rate)
        if (epoch + 1) % 50 == 0:
            logger.debug("MLP epoch %d: loss %.6f", epoch + 1, loss)

    return MlpModel(
        n_features=train.n_features,
        spec=spec,
        hidden_weights=params.hidden_weights,
        hidden_bias=params.hidden_bias,
        output_weights=params.output_weights,
        output_bias=float(params.output_bias),
    )
