import logging

import numpy as np

from asdbench.models.classifier_model import DecisionTreeSpec
from asdbench.models.table_model import Dataset
from asdbench.models.trained_model import DecisionTreeModel

from ._training_checks import require_rows
from .tree_builder import grow_tree


logger = logging.getLogger(__name__)


def fit_decision_tree(train: Dataset, spec: DecisionTreeSpec) -> DecisionTreeModel:
    """CART with Gini impurity; leaves store the positive fraction of their rows."""
    require_rows(train, "decision tree")
    labels = train.labels.astype(np.float64)
    root = grow_tree(
        train.features,
        labels,
        criterion="gini",
        max_depth=spec.max_depth,
        min_leaf=spec.min_leaf,
        leaf_value=lambda rows: float(labels[rows].mean()),
    )
    logger.debug("Decision tree: depth %d, %d leaves", root.depth, root.n_leaves)
    return DecisionTreeModel(n_features=train.n_features, spec=spec, root=root)
