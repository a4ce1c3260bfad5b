"""Fitted model states for the seven learners.

Every model maps a feature matrix to real-valued scores (higher means more
likely class 1) and labels with a strict ``score > THRESHOLD`` rule, so a
score exactly at the threshold is class 0.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, ClassVar

import numpy as np

from asdbench.exceptions import TrainingError
from asdbench.helpers.numeric_helper import sigmoid

from .classifier_model import (
    DecisionTreeSpec,
    GradientBoostSpec,
    KnnSpec,
    LogisticSpec,
    MlpSpec,
    NaiveBayesSpec,
    SvmSpec,
)


@dataclass(frozen=True)
class Prediction:
    """Hard label plus the score it was thresholded from."""

    label: int
    score: float


@dataclass(frozen=True, kw_only=True, eq=False)
class TrainedModel(ABC):
    """Common prediction contract.

    Attributes:
        n_features: Dimension the model was fitted on.
    """

    THRESHOLD: ClassVar[float] = 0.5

    n_features: int

    @property
    @abstractmethod
    def family(self) -> str:
        """Spec ``kind`` this model was fitted from."""

    @abstractmethod
    def _raw_scores(self, X: np.ndarray) -> np.ndarray:
        """Scores for a validated ``m x d`` matrix."""

    def scores(self, X: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=np.float64)
        if X.ndim == 1:
            X = X[np.newaxis, :]
        if X.shape[1] != self.n_features:
            raise TrainingError(
                f"{self.family} model expects {self.n_features} features, got {X.shape[1]}"
            )
        return self._raw_scores(X)

    def labels(self, X: np.ndarray) -> np.ndarray:
        return (self.scores(X) > self.THRESHOLD).astype(np.int64)

    def predict(self, x: np.ndarray) -> Prediction:
        score = float(self.scores(np.asarray(x, dtype=np.float64).reshape(1, -1))[0])
        return Prediction(label=int(score > self.THRESHOLD), score=score)


@dataclass(frozen=True, kw_only=True, eq=False)
class NaiveBayesModel(TrainedModel):
    """Class priors with Bernoulli (0/1 columns) and Gaussian (other) likelihoods.

    Row 0 of each ``2 x d`` table is class NO, row 1 class YES.
    """

    spec: NaiveBayesSpec
    priors: np.ndarray
    bernoulli_mask: np.ndarray
    bernoulli_p: np.ndarray
    gauss_mean: np.ndarray
    gauss_var: np.ndarray

    @property
    def family(self) -> str:
        return "naive_bayes"

    def joint_log_likelihood(self, X: np.ndarray) -> np.ndarray:
        """``m x 2`` matrix of ``log P(c) + log P(x | c)``."""
        mask = self.bernoulli_mask
        jll = np.tile(np.log(self.priors), (X.shape[0], 1))
        if mask.any():
            xb = X[:, mask]
            log_p = np.log(self.bernoulli_p[:, mask])
            log_q = np.log1p(-self.bernoulli_p[:, mask])
            jll += xb @ log_p.T + (1.0 - xb) @ log_q.T
        if (~mask).any():
            xg = X[:, ~mask]
            mean = self.gauss_mean[:, ~mask]
            var = self.gauss_var[:, ~mask]
            for c in (0, 1):
                jll[:, c] += -0.5 * np.sum(
                    np.log(2.0 * np.pi * var[c]) + (xg - mean[c]) ** 2 / var[c], axis=1
                )
        return jll

    def _raw_scores(self, X: np.ndarray) -> np.ndarray:
        jll = self.joint_log_likelihood(X)
        return sigmoid(jll[:, 1] - jll[:, 0])


@dataclass(frozen=True, kw_only=True, eq=False)
class KnnModel(TrainedModel):
    """Lazy learner holding the (standardized) training matrix."""

    spec: KnnSpec
    train_features: np.ndarray
    train_labels: np.ndarray

    @property
    def family(self) -> str:
        return "knn"

    def neighbours(self, x: np.ndarray) -> np.ndarray:
        """Indices of the ``k`` nearest training rows; ties go to the lower index."""
        distances = np.sum((self.train_features - x) ** 2, axis=1)
        return np.argsort(distances, kind="stable")[: self.spec.k]

    def _raw_scores(self, X: np.ndarray) -> np.ndarray:
        return np.array(
            [self.train_labels[self.neighbours(row)].mean() for row in X],
            dtype=np.float64,
        )


@dataclass(frozen=True, kw_only=True, eq=False)
class LogisticModel(TrainedModel):
    spec: LogisticSpec
    weights: np.ndarray
    bias: float
    iterations: int = 0

    @property
    def family(self) -> str:
        return "logistic"

    def _raw_scores(self, X: np.ndarray) -> np.ndarray:
        return sigmoid(X @ self.weights + self.bias)


@dataclass(frozen=True, eq=False)
class TreeNode:
    """Binary tree node; a leaf has ``feature is None``.

    Rows with ``x[feature] <= threshold`` go left.
    """

    value: float
    feature: int | None = None
    threshold: float = 0.0
    left: "TreeNode | None" = None
    right: "TreeNode | None" = None

    @property
    def is_leaf(self) -> bool:
        return self.feature is None

    @property
    def depth(self) -> int:
        if self.is_leaf:
            return 0
        return 1 + max(self.left.depth, self.right.depth)  # type: ignore[union-attr]

    @property
    def n_leaves(self) -> int:
        if self.is_leaf:
            return 1
        return self.left.n_leaves + self.right.n_leaves  # type: ignore[union-attr]

    def evaluate(self, X: np.ndarray) -> np.ndarray:
        out = np.empty(X.shape[0], dtype=np.float64)
        self._fill(X, np.arange(X.shape[0]), out)
        return out

    def _fill(self, X: np.ndarray, rows: np.ndarray, out: np.ndarray) -> None:
        if self.is_leaf:
            out[rows] = self.value
            return
        goes_left = X[rows, self.feature] <= self.threshold
        self.left._fill(X, rows[goes_left], out)  # type: ignore[union-attr]
        self.right._fill(X, rows[~goes_left], out)  # type: ignore[union-attr]

    def to_dict(self) -> dict[str, Any]:
        if self.is_leaf:
            return {"value": self.value}
        return {
            "value": self.value,
            "feature": self.feature,
            "threshold": self.threshold,
            "left": self.left.to_dict(),  # type: ignore[union-attr]
            "right": self.right.to_dict(),  # type: ignore[union-attr]
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "TreeNode":
        if "feature" not in data:
            return cls(value=float(data["value"]))
        return cls(
            value=float(data["value"]),
            feature=int(data["feature"]),
            threshold=float(data["threshold"]),
            left=cls.from_dict(data["left"]),
            right=cls.from_dict(data["right"]),
        )


@dataclass(frozen=True, kw_only=True, eq=False)
class GradientBoostModel(TrainedModel):
    """Additive log-odds model ``F0 + shrinkage * sum(trees)``."""

    spec: GradientBoostSpec
    base_score: float
    trees: tuple[TreeNode, ...]

    @property
    def family(self) -> str:
        return "gradient_boost"

    def staged_logits(self, X: np.ndarray):
        """Yield the raw score vector after 0, 1, ..., ``len(trees)`` rounds."""
        logits = np.full(X.shape[0], self.base_score, dtype=np.float64)
        yield logits.copy()
        for tree in self.trees:
            logits += self.spec.shrinkage * tree.evaluate(X)
            yield logits.copy()

    def _raw_scores(self, X: np.ndarray) -> np.ndarray:
        logits = np.full(X.shape[0], self.base_score, dtype=np.float64)
        for tree in self.trees:
            logits += self.spec.shrinkage * tree.evaluate(X)
        return sigmoid(logits)


@dataclass(frozen=True, kw_only=True, eq=False)
class DecisionTreeModel(TrainedModel):
    """CART tree whose leaves hold the positive fraction of their rows."""

    spec: DecisionTreeSpec
    root: TreeNode

    @property
    def family(self) -> str:
        return "decision_tree"

    def _raw_scores(self, X: np.ndarray) -> np.ndarray:
        return self.root.evaluate(X)


@dataclass(frozen=True, kw_only=True, eq=False)
class SvmModel(TrainedModel):
    """Kernel expansion over the support vectors.

    Attributes:
        support_indices: Training-row index of each support vector.
        alphas: Dual multipliers of the support vectors, in ``(0, C]``.
        support_labels: Support-vector labels in ``{-1, +1}``.
        kernel: Kernel spec with every parameter resolved.
        diagnostics: Solver counters (iterations, passes, converged, ...).
    """

    THRESHOLD: ClassVar[float] = 0.0

    spec: SvmSpec
    support_vectors: np.ndarray
    support_indices: np.ndarray
    alphas: np.ndarray
    support_labels: np.ndarray
    bias: float
    diagnostics: dict[str, Any] = field(default_factory=dict)

    @property
    def family(self) -> str:
        return "svm"

    @property
    def kernel(self):
        return self.spec.kernel

    @property
    def dual_coef(self) -> np.ndarray:
        return self.alphas * self.support_labels

    def _raw_scores(self, X: np.ndarray) -> np.ndarray:
        # Deferred import: kernel service imports models.
        from asdbench.services.kernel_service import cross_kernel

        if self.alphas.size == 0:
            return np.full(X.shape[0], self.bias, dtype=np.float64)
        return cross_kernel(self.kernel, X, self.support_vectors) @ self.dual_coef + self.bias


@dataclass(frozen=True, kw_only=True, eq=False)
class MlpModel(TrainedModel):
    """One ReLU hidden layer and a sigmoid output unit."""

    spec: MlpSpec
    hidden_weights: np.ndarray
    hidden_bias: np.ndarray
    output_weights: np.ndarray
    output_bias: float

    @property
    def family(self) -> str:
        return "mlp"

    def _raw_scores(self, X: np.ndarray) -> np.ndarray:
        hidden = np.maximum(0.0, X @ self.hidden_weights + self.hidden_bias)
        return sigmoid(hidden @ self.output_weights + self.output_bias)
