"""Greedy binary tree growth shared by the decision tree and gradient boosting.

Splits are found by an exhaustive scan over every feature and every
midpoint between consecutive distinct sorted values. The split cost is
the summed child impurity computed from running sums:

* ``gini``: ``n * Gini = 2 * (s - s**2 / n)`` for 0/1 targets;
* ``squared_error``: ``ss - s**2 / n``.

The first candidate with the lowest cost wins (lower feature index, then
lower threshold). Splits that do not lower the impurity are still taken
while the node is impure, which lets the tree represent XOR-like targets.
"""

from collections.abc import Callable
from dataclasses import dataclass
from typing import Literal

import numpy as np

from asdbench.models.trained_model import TreeNode


Criterion = Literal["gini", "squared_error"]
TIE_TOLERANCE = 1e-12


def gini(labels: np.ndarray) -> float:
    """Gini impurity ``1 - sum(p_c**2)`` of a 0/1 label vector."""
    if labels.size == 0:
        return 0.0
    p = float(np.mean(labels))
    return 1.0 - p * p - (1.0 - p) * (1.0 - p)


@dataclass(frozen=True)
class Split:
    feature: int
    threshold: float
    cost: float


def _node_cost(criterion: Criterion, n: np.ndarray, s: np.ndarray, ss: np.ndarray) -> np.ndarray:
    if criterion == "gini":
        return 2.0 * (s - s * s / n)
    return ss - s * s / n


def best_split(
    X: np.ndarray, target: np.ndarray, *, criterion: Criterion, min_leaf: int
) -> Split | None:
    """Lowest-cost split with at least ``min_leaf`` rows on each side, if any."""
    m = X.shape[0]
    if m < 2 * min_leaf:
        return None
    total_s = float(target.sum())
    total_ss = float((target * target).sum())
    left_n = np.arange(1, m, dtype=np.float64)
    right_n = m - left_n

    best: Split | None = None
    for feature in range(X.shape[1]):
        order = np.argsort(X[:, feature], kind="stable")
        xs = X[order, feature]
        ts = target[order]
        cs = np.cumsum(ts)[:-1]
        css = np.cumsum(ts * ts)[:-1]

        valid = (xs[1:] > xs[:-1]) & (left_n >= min_leaf) & (right_n >= min_leaf)
        if not valid.any():
            continue
        cost = _node_cost(criterion, left_n, cs, css) + _node_cost(
            criterion, right_n, total_s - cs, total_ss - css
        )
        cost = np.where(valid, cost, np.inf)
        k = int(np.argmin(cost))
        if best is None or cost[k] < best.cost - TIE_TOLERANCE:
            best = Split(
                feature=feature,
                threshold=float((xs[k] + xs[k + 1]) / 2.0),
                cost=float(cost[k]),
            )
    return best


def grow_tree(
    X: np.ndarray,
    target: np.ndarray,
    *,
    criterion: Criterion,
    max_depth: int | None,
    min_leaf: int,
    leaf_value: Callable[[np.ndarray], float],
) -> TreeNode:
    """Grow a tree over all rows of ``X``.

    Args:
        X: ``n x d`` feature matrix.
        target: Split target (labels for ``gini``, residuals for
            ``squared_error``).
        criterion: Split cost.
        max_depth: Depth limit; ``None`` for unbounded.
        min_leaf: Minimum rows per child.
        leaf_value: Maps the row indices of a node to its stored value.
    """

    def grow(rows: np.ndarray, depth: int) -> TreeNode:
        value = leaf_value(rows)
        node_target = target[rows]
        pure = bool(np.all(node_target == node_target[0])) if rows.size else True
        if pure or (max_depth is not None and depth >= max_depth):
            return TreeNode(value=value)
        split = best_split(X[rows], node_target, criterion=criterion, min_leaf=min_leaf)
        if split is None:
            return TreeNode(value=value)
        goes_left = X[rows, split.feature] <= split.threshold
        return TreeNode(
            value=value,
            feature=split.feature,
            threshold=split.threshold,
            left=grow(rows[goes_left], depth + 1),
            right=grow(rows[~goes_left], depth + 1),
        )

    return grow(np.arange(X.shape[0]), 0)
