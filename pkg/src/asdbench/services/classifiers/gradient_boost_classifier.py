"""Gradient boosting of regression trees on the logistic loss.

Each round fits a tree to the residuals ``y - p`` and sets every leaf to
the Newton step ``sum(residual) / max(sum(p * (1 - p)), 1e-12)``.
"""

import logging

import numpy as np

from asdbench.helpers.numeric_helper import cross_entropy_from_logits, sigmoid
from asdbench.models.classifier_model import GradientBoostSpec
from asdbench.models.table_model import Dataset
from asdbench.models.trained_model import GradientBoostModel, TreeNode

from ._training_checks import require_both_classes
from .tree_builder import grow_tree


logger = logging.getLogger(__name__)

HESSIAN_FLOOR = 1e-12


def fit_gradient_boost(train: Dataset, spec: GradientBoostSpec) -> GradientBoostModel:
    require_both_classes(train, "gradient boosting")
    X = train.features
    y = train.labels.astype(np.float64)
    base_rate = float(y.mean())
    base_score = float(np.log(base_rate / (1.0 - base_rate)))

    logits = np.full(train.n_samples, base_score)
    trees: list[TreeNode] = []
    for round_ in range(spec.rounds):
        p = sigmoid(logits)
        residual = y - p
        hessian = p * (1.0 - p)

        def newton_leaf(rows: np.ndarray, residual=residual, hessian=hessian) -> float:
            return float(residual[rows].sum() / max(hessian[rows].sum(), HESSIAN_FLOOR))

        tree = grow_tree(
            X,
            residual,
            criterion="squared_error",
            max_depth=spec.max_depth,
            min_leaf=1,
            leaf_value=newton_leaf,
        )
        trees.append(tree)
        logits = logits + spec.shrinkage * tree.evaluate(X)
        if logger.isEnabledFor(logging.DEBUG) and (round_ + 1) % 25 == 0:
            logger.debug(
                "Boosting round %d: train loss %.6f",
                round_ + 1,
                cross_entropy_from_logits(logits, y),
            )

    return GradientBoostModel(
        n_features=train.n_features, spec=spec, base_score=base_score, trees=tuple(trees)
    )
