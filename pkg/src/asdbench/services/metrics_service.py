"""Confusion counts, per-class precision/recall/F1, ROC curves and AUC.

The positive class is label 1 (``YES``). Any 0/0 ratio is defined as 0
and its name is recorded in ``degenerate``.
"""

from collections.abc import Sequence

import numpy as np

from asdbench.models.metric_model import (
    ClassMetrics,
    ConfusionMatrix,
    MetricReport,
    PrfReport,
    RocCurve,
)


def _labels(values: Sequence[int] | np.ndarray, what: str) -> np.ndarray:
    array = np.asarray(values).astype(np.int64).ravel()
    if array.size and not np.all((array == 0) | (array == 1)):
        raise ValueError(f"{what} must contain only 0 and 1")
    return array


def _both_classes(truth: np.ndarray) -> None:
    positives = int(truth.sum())
    if positives == 0 or positives == truth.size:
        raise ValueError("ROC analysis needs both classes in the truth labels")


def confusion(truth: Sequence[int], predicted: Sequence[int]) -> ConfusionMatrix:
    """Count TP/FP/TN/FN.

    Raises:
        ValueError: Length mismatch or empty input.
    """
    t = _labels(truth, "truth")
    p = _labels(predicted, "predictions")
    if t.shape != p.shape:
        raise ValueError(f"{t.size} truth labels but {p.size} predictions")
    if t.size == 0:
        raise ValueError("cannot build a confusion matrix from no instances")
    return ConfusionMatrix(
        tp=int(np.sum((t == 1) & (p == 1))),
        fp=int(np.sum((t == 0) & (p == 1))),
        tn=int(np.sum((t == 0) & (p == 0))),
        fn=int(np.sum((t == 1) & (p == 0))),
    )


def _ratio(numerator: int, denominator: int, name: str, degenerate: list[str]) -> float:
    if denominator == 0:
        degenerate.append(name)
        return 0.0
    return numerator / denominator


def _f1(precision: float, recall: float, name: str, degenerate: list[str]) -> float:
    if precision + recall == 0.0:
        degenerate.append(name)
        return 0.0
    return 2.0 * precision * recall / (precision + recall)


def prf_report(cm: ConfusionMatrix) -> PrfReport:
    """Accuracy plus precision/recall/F1 for YES and, with roles swapped, NO.

    Raises:
        ValueError: Empty confusion matrix.
    """
    if cm.total == 0:
        raise ValueError("confusion matrix is empty")
    degenerate: list[str] = []
    precision_yes = _ratio(cm.tp, cm.tp + cm.fp, "precision_yes", degenerate)
    recall_yes = _ratio(cm.tp, cm.tp + cm.fn, "recall_yes", degenerate)
    precision_no = _ratio(cm.tn, cm.tn + cm.fn, "precision_no", degenerate)
    recall_no = _ratio(cm.tn, cm.tn + cm.fp, "recall_no", degenerate)
    yes = ClassMetrics(precision_yes, recall_yes, _f1(precision_yes, recall_yes, "f1_yes", degenerate))
    no = ClassMetrics(precision_no, recall_no, _f1(precision_no, recall_no, "f1_no", degenerate))
    return PrfReport(
        accuracy=(cm.tp + cm.tn) / cm.total,
        no=no,
        yes=yes,
        degenerate=tuple(sorted(degenerate)),
    )


def roc_points(scores: Sequence[float], truth: Sequence[int]) -> RocCurve:
    """Tie-grouped ROC curve.

    Scores are swept from high to low; all instances sharing a score enter
    in one step, so each tie group contributes a single diagonal segment.

    Raises:
        ValueError: Length mismatch or one-class truth.
    """
    s = np.asarray(scores, dtype=np.float64).ravel()
    t = _labels(truth, "truth")
    if s.shape != t.shape:
        raise ValueError(f"{s.size} scores but {t.size} truth labels")
    if not np.all(np.isfinite(s)):
        raise ValueError("scores must be finite")
    _both_classes(t)

    order = np.argsort(-s, kind="stable")
    s_sorted = s[order]
    t_sorted = t[order]
    # last index of every tie group
    group_ends = np.flatnonzero(np.diff(s_sorted) != 0.0)
    group_ends = np.append(group_ends, s_sorted.size - 1)
    tps = np.cumsum(t_sorted)[group_ends]
    fps = np.cumsum(1 - t_sorted)[group_ends]
    n_pos, n_neg = int(tps[-1]), int(fps[-1])

    points = [(0.0, 0.0)]
    points += [(float(fp / n_neg), float(tp / n_pos)) for tp, fp in zip(tps, fps, strict=True)]
    if points[-1] != (1.0, 1.0):
        points.append((1.0, 1.0))
    return RocCurve(points=tuple(points))


def auc(curve: RocCurve) -> float:
    """Trapezoidal area under the curve."""
    fpr = np.asarray(curve.fpr)
    tpr = np.asarray(curve.tpr)
    return float(np.sum(np.diff(fpr) * (tpr[1:] + tpr[:-1]) / 2.0))


def auc_pairwise_oracle(scores: Sequence[float], truth: Sequence[int]) -> float:
    """``P(s+ > s-) + 1/2 P(s+ == s-)`` by counting every positive/negative pair.

    Raises:
        ValueError: One-class truth.
    """
    s = np.asarray(scores, dtype=np.float64).ravel()
    t = _labels(truth, "truth")
    _both_classes(t)
    positives = s[t == 1]
    negatives = s[t == 0]
    wins = 0.0
    for score in positives:
        wins += float(np.sum(score > negatives)) + 0.5 * float(np.sum(score == negatives))
    return wins / (positives.size * negatives.size)


def evaluate(truth: Sequence[int], predicted: Sequence[int], scores: Sequence[float]) -> MetricReport:
    """Full metric report for one learner on one test split."""
    cm = confusion(truth, predicted)
    prf = prf_report(cm)
    curve = roc_points(scores, truth)
    return MetricReport(
        accuracy=prf.accuracy,
        auc=auc(curve),
        no=prf.no,
        yes=prf.yes,
        confusion=cm,
        roc=curve,
        degenerate=prf.degenerate,
    )


def roc_to_csv(curve: RocCurve) -> str:
    """Two-column ``fpr,tpr`` CSV with a header line."""
    lines = ["fpr,tpr"] + [f"{fpr!r},{tpr!r}" for fpr, tpr in curve.points]
    return "\n".join(lines) + "\n"
