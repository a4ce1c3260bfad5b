import numpy as np

from asdbench.exceptions import TrainingError
from asdbench.models.classifier_model import KnnSpec
from asdbench.models.table_model import Dataset
from asdbench.models.trained_model import KnnModel

from ._training_checks import require_rows


def fit_knn(train: Dataset, spec: KnnSpec) -> KnnModel:
    """Lazy model: keeps the (already standardized) training rows.

    Raises:
        TrainingError: ``k`` exceeds the number of training rows.
    """
    require_rows(train, "kNN")
    if spec.k > train.n_samples:
        raise TrainingError(f"kNN: k={spec.k} exceeds the {train.n_samples} training rows")
    return KnnModel(
        n_features=train.n_features,
        spec=spec,
        train_features=np.array(train.features),
        train_labels=np.array(train.labels, dtype=np.float64),
    )
