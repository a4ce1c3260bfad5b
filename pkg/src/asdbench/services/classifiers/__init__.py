"""The seven learners behind one ``fit`` / ``predict`` contract."""

import numpy as np

from asdbench.models.classifier_model import (
    ClassifierSpec,
    DecisionTreeSpec,
    GradientBoostSpec,
    KnnSpec,
    LogisticSpec,
    MlpSpec,
    NaiveBayesSpec,
    SvmSpec,
)
from asdbench.models.table_model import Dataset
from asdbench.models.trained_model import Prediction, TrainedModel

from .decision_tree_classifier import fit_decision_tree
from .gradient_boost_classifier import fit_gradient_boost
from .knn_classifier import fit_knn
from .logistic_classifier import fit_logistic
from .mlp_classifier import fit_mlp
from .model_persistence import dump_model, load_model, read_model, save_model
from .naive_bayes_classifier import fit_naive_bayes
from .svm_classifier import fit_svm


def fit(train: Dataset, spec: ClassifierSpec) -> TrainedModel:
    """Fit the learner ``spec`` describes.

    Scale-sensitive learners (``spec.STANDARDIZED``) expect standardized
    features; the experiment runner takes care of that.
    """
    match spec:
        case NaiveBayesSpec():
            return fit_naive_bayes(train, spec)
        case KnnSpec():
            return fit_knn(train, spec)
        case LogisticSpec():
            return fit_logistic(train, spec)
        case GradientBoostSpec():
            return fit_gradient_boost(train, spec)
        case DecisionTreeSpec():
            return fit_decision_tree(train, spec)
        case SvmSpec():
            return fit_svm(train, spec)
        case MlpSpec():
            return fit_mlp(train, spec)
    raise TypeError(f"unsupported classifier spec {type(spec).__name__}")


def predict(model: TrainedModel, x: np.ndarray) -> Prediction:
    """Label and score of a single feature vector."""
    return model.predict(x)


__all__ = [
    "dump_model",
    "fit",
    "fit_decision_tree",
    "fit_gradient_boost",
    "fit_knn",
    "fit_logistic",
    "fit_mlp",
    "fit_naive_bayes",
    "fit_svm",
    "load_model",
    "predict",
    "read_model",
    "save_model",
]
