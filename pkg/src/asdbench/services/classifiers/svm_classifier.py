"""Soft-margin kernel SVM trained by sequential minimal optimization.

Solver outline:

* the Gram matrix is materialized once and ``g = K @ (alpha * y)`` is kept
  up to date after every pair update;
* a pass scans the multipliers in index order and picks every ``i`` that
  violates the KKT conditions by more than ``tol``;
* its partner ``j`` maximizes ``|E_i - E_j|``; when that pair makes no
  progress the other indices are tried in index order;
* after each update the bias is the mean of ``y_k - g_k`` over the
  non-bound support vectors, or the midpoint of the interval the bound
  multipliers allow when there are none;
* the solver stops after ``max_passes`` passes without an update, or at
  ``max_iters`` examined violators (a warning, not an error).

Pair selection is deterministic, so a pass without updates would repeat
identically; the loop therefore stops at the first such pass.
"""

import logging
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from asdbench.models.classifier_model import SvmSpec
from asdbench.models.table_model import Dataset
from asdbench.models.trained_model import SvmModel
from asdbench.services.kernel_service import gram_matrix

from ._training_checks import require_both_classes


logger = logging.getLogger(__name__)

CURVATURE_FLOOR = 1e-12


def dual_objective(alphas: np.ndarray, y: np.ndarray, K: np.ndarray) -> float:
    """``sum(alpha) - 1/2 * sum_ij alpha_i alpha_j y_i y_j K_ij``."""
    ay = alphas * y
    return float(alphas.sum() - 0.5 * ay @ K @ ay)


def bias_from_kkt(alphas: np.ndarray, y: np.ndarray, g: np.ndarray, C: float) -> float:
    """Bias consistent with the KKT conditions for fixed multipliers."""
    free = (alphas > 0.0) & (alphas < C)
    targets = y - g
    if free.any():
        return float(targets[free].mean())
    # b must satisfy y_k (g_k + b) >= 1 at alpha=0 and <= 1 at alpha=C
    at_zero = alphas <= 0.0
    lower_mask = (at_zero & (y > 0)) | (~at_zero & (y < 0))
    upper_mask = (at_zero & (y < 0)) | (~at_zero & (y > 0))
    lower = float(targets[lower_mask].max()) if lower_mask.any() else None
    upper = float(targets[upper_mask].min()) if upper_mask.any() else None
    if lower is not None and upper is not None:
        return (lower + upper) / 2.0
    return lower if lower is not None else (upper if upper is not None else 0.0)


@dataclass
class SmoSolver:
    """Mutable SMO state over a fixed Gram matrix.

    Attributes:
        K: ``n x n`` Gram matrix.
        y: Labels in ``{-1, +1}``.
        C: Box constraint.
        tol: KKT violation tolerance.
        eps: Minimum multiplier change counted as progress; multipliers
            closer than this to a bound snap to it.
    """

    K: np.ndarray
    y: np.ndarray
    C: float
    tol: float
    eps: float
    alphas: np.ndarray = field(init=False)
    g: np.ndarray = field(init=False)
    bias: float = field(init=False, default=0.0)

    def __post_init__(self):
        n = self.y.shape[0]
        self.alphas = np.zeros(n)
        self.g = np.zeros(n)

    def errors(self) -> np.ndarray:
        return self.g + self.bias - self.y

    def violates_kkt(self, i: int) -> bool:
        r = self.y[i] * (self.g[i] + self.bias - self.y[i])
        return bool((r < -self.tol and self.alphas[i] < self.C) or (r > self.tol and self.alphas[i] > 0.0))

    def _gain(self, i: int, j: int, delta_i: float, delta_j: float) -> float:
        K, y = self.K, self.y
        return (
            delta_i
            + delta_j
            - delta_i * y[i] * self.g[i]
            - delta_j * y[j] * self.g[j]
            - 0.5
            * (
                delta_i * delta_i * K[i, i]
                + delta_j * delta_j * K[j, j]
                + 2.0 * delta_i * delta_j * y[i] * y[j] * K[i, j]
            )
        )

    def take_step(self, i: int, j: int) -> bool:
        """Jointly optimize ``alpha_i`` and ``alpha_j``; False when nothing moves."""
        if i == j:
            return False
        K, y, C = self.K, self.y, self.C
        a_i, a_j = self.alphas[i], self.alphas[j]
        s = y[i] * y[j]
        if s < 0:
            low, high = max(0.0, a_j - a_i), min(C, C + a_j - a_i)
        else:
            low, high = max(0.0, a_i + a_j - C), min(C, a_i + a_j)
        if high - low < self.eps:
            return False

        e_i = self.g[i] + self.bias - y[i]
        e_j = self.g[j] + self.bias - y[j]
        eta = K[i, i] + K[j, j] - 2.0 * K[i, j]
        if eta > CURVATURE_FLOOR:
            new_j = float(np.clip(a_j + y[j] * (e_i - e_j) / eta, low, high))
        else:
            # non-positive curvature: take the better end of the segment
            gains = [self._gain(i, j, s * (a_j - end), end - a_j) for end in (low, high)]
            if max(gains) <= self.eps:
                return False
            new_j = low if gains[0] >= gains[1] else high

        if new_j - low < self.eps:
            new_j = low
        elif high - new_j < self.eps:
            new_j = high
        if abs(new_j - a_j) < self.eps * (new_j + a_j + self.eps):
            return False
        new_i = float(np.clip(a_i + s * (a_j - new_j), 0.0, C))

        delta_i, delta_j = new_i - a_i, new_j - a_j
        self.g += delta_i * y[i] * K[:, i] + delta_j * y[j] * K[:, j]
        self.alphas[i], self.alphas[j] = new_i, new_j
        self.bias = bias_from_kkt(self.alphas, y, self.g, C)
        return True

    def partners(self, i: int) -> list[int]:
        """Candidate ``j`` for ``i``: max ``|E_i - E_j|`` first, then index order."""
        errors = self.errors()
        gaps = np.abs(errors[i] - errors)
        gaps[i] = -np.inf
        first = int(np.argmax(gaps))

        # fallback only over partners whose feasible segment is not a point
        a_i, C = self.alphas[i], self.C
        same_label = self.y[i] * self.y > 0
        low = np.where(same_label, np.maximum(0.0, a_i + self.alphas - C), np.maximum(0.0, self.alphas - a_i))
        high = np.where(same_label, np.minimum(C, a_i + self.alphas), np.minimum(C, C + self.alphas - a_i))
        movable = high - low >= self.eps
        movable[[i, first]] = False
        return [first, *np.flatnonzero(movable).tolist()]

    def examine(self, i: int) -> bool:
        return any(self.take_step(i, j) for j in self.partners(i))


def fit_svm(train: Dataset, spec: SvmSpec) -> SvmModel:
    """Fit the dual by SMO on ``y in {-1, +1}``.

    Raises:
        TrainingError: One class only, or non-finite kernel values.
    """
    require_both_classes(train, "SVM")
    X = train.features
    y = np.where(train.labels == 1, 1.0, -1.0)
    kernel = spec.kernel.resolved(X)
    K = gram_matrix(kernel, X)

    solver = SmoSolver(K=K, y=y, C=spec.C, tol=spec.tol, eps=spec.eps)
    iterations = 0
    passes = 0
    quiet_passes = 0
    capped = False
    while quiet_passes < spec.max_passes and not capped:
        changed = 0
        for i in range(train.n_samples):
            if not solver.violates_kkt(i):
                continue
            if iterations >= spec.max_iters:
                capped = True
                break
            iterations += 1
            if solver.examine(i):
                changed += 1
        passes += 1
        quiet_passes = 0 if changed else spec.max_passes
        logger.debug("SMO pass %d: %d updates", passes, changed)

    converged = not capped
    if capped:
        logger.warning(
            "SMO hit max_iters=%d before convergence (%s kernel, C=%g)",
            spec.max_iters,
            kernel.label,
            spec.C,
        )

    support = np.flatnonzero(solver.alphas > 0.0)
    diagnostics: dict[str, Any] = {
        "iterations": iterations,
        "passes": passes,
        "converged": converged,
        "n_support": int(support.size),
        "dual_objective": dual_objective(solver.alphas, y, K),
    }
    return SvmModel(
        n_features=train.n_features,
        spec=spec.model_copy(update={"kernel": kernel}),
        support_vectors=np.array(X[support]),
        support_indices=support,
        alphas=solver.alphas[support].copy(),
        support_labels=y[support],
        bias=float(solver.bias),
        diagnostics=diagnostics,
    )
