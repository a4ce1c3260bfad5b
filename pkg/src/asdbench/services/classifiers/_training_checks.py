import numpy as np

from asdbench.exceptions import TrainingError
from asdbench.models.table_model import Dataset


def require_rows(train: Dataset, learner: str) -> None:
    if train.n_samples == 0:
        raise TrainingError(f"{learner}: training set is empty")


def require_both_classes(train: Dataset, learner: str) -> None:
    require_rows(train, learner)
    n_no, n_yes = train.class_counts()
    if n_no == 0 or n_yes == 0:
        present = "YES" if n_yes else "NO"
        raise TrainingError(f"{learner}: training set holds only class {present}")


def require_finite(value: float, learner: str, step: int) -> None:
    if not np.isfinite(value):
        raise TrainingError(
            f"{learner}: loss became non-finite at step {step}; lower the learning rate"
        )
