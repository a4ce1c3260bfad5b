"""Versioned JSON documents for fitted models.

Floats are written with Python's shortest round-trip representation, so a
dumped and reloaded model scores bit-identically.
"""

import json
from pathlib import Path
from typing import Any

import numpy as np
from pydantic import TypeAdapter, ValidationError

from asdbench.exceptions import ModelFormatError
from asdbench.models.classifier_model import ClassifierSpec
from asdbench.models.trained_model import (
    DecisionTreeModel,
    GradientBoostModel,
    KnnModel,
    LogisticModel,
    MlpModel,
    NaiveBayesModel,
    SvmModel,
    TrainedModel,
    TreeNode,
)


MODEL_FORMAT_VERSION = 1

_SPEC_ADAPTER: TypeAdapter = TypeAdapter(ClassifierSpec)


def _params(model: TrainedModel) -> dict[str, Any]:
    match model:
        case NaiveBayesModel():
            return {
                "priors": model.priors.tolist(),
                "bernoulli_mask": model.bernoulli_mask.tolist(),
                "bernoulli_p": model.bernoulli_p.tolist(),
                "gauss_mean": model.gauss_mean.tolist(),
                "gauss_var": model.gauss_var.tolist(),
            }
        case KnnModel():
            return {
                "train_features": model.train_features.tolist(),
                "train_labels": model.train_labels.tolist(),
            }
        case LogisticModel():
            return {
                "weights": model.weights.tolist(),
                "bias": model.bias,
                "iterations": model.iterations,
            }
        case GradientBoostModel():
            return {
                "base_score": model.base_score,
                "trees": [tree.to_dict() for tree in model.trees],
            }
        case DecisionTreeModel():
            return {"root": model.root.to_dict()}
        case SvmModel():
            return {
                "support_vectors": model.support_vectors.tolist(),
                "support_indices": model.support_indices.tolist(),
                "alphas": model.alphas.tolist(),
                "support_labels": model.support_labels.tolist(),
                "bias": model.bias,
                "diagnostics": model.diagnostics,
            }
        case MlpModel():
            return {
                "hidden_weights": model.hidden_weights.tolist(),
                "hidden_bias": model.hidden_bias.tolist(),
                "output_weights": model.output_weights.tolist(),
                "output_bias": model.output_bias,
            }
    raise TypeError(f"unsupported model type {type(model).__name__}")


def dump_model(model: TrainedModel) -> dict[str, Any]:
    """JSON-ready document with the spec and every fitted parameter."""
    return {
        "format_version": MODEL_FORMAT_VERSION,
        "family": model.family,
        "n_features": model.n_features,
        "spec": model.spec.model_dump(mode="json"),  # type: ignore[attr-defined]
        "params": _params(model),
    }


def _matrix(values: Any, n_features: int) -> np.ndarray:
    return np.asarray(values, dtype=np.float64).reshape(-1, n_features)


def load_model(document: dict[str, Any]) -> TrainedModel:
    """Rebuild a model from :func:`dump_model` output.

    Raises:
        ModelFormatError: Unknown version or family, or malformed fields.
    """
    version = document.get("format_version")
    if version != MODEL_FORMAT_VERSION:
        raise ModelFormatError(f"unsupported model format version: {version}")
    try:
        spec = _SPEC_ADAPTER.validate_python(document["spec"])
        n = int(document["n_features"])
        p = document["params"]
        if spec.kind != document.get("family"):
            raise ModelFormatError(
                f"family '{document.get('family')}' does not match spec kind '{spec.kind}'"
            )
        match spec.kind:
            case "naive_bayes":
                return NaiveBayesModel(
                    n_features=n,
                    spec=spec,
                    priors=np.asarray(p["priors"], dtype=np.float64),
                    bernoulli_mask=np.asarray(p["bernoulli_mask"], dtype=bool),
                    bernoulli_p=_matrix(p["bernoulli_p"], n),
                    gauss_mean=_matrix(p["gauss_mean"], n),
                    gauss_var=_matrix(p["gauss_var"], n),
                )
            case "knn":
                return KnnModel(
                    n_features=n,
                    spec=spec,
                    train_features=_matrix(p["train_features"], n),
                    train_labels=np.asarray(p["train_labels"], dtype=np.float64),
                )
            case "logistic":
                return LogisticModel(
                    n_features=n,
                    spec=spec,
                    weights=np.asarray(p["weights"], dtype=np.float64),
                    bias=float(p["bias"]),
                    iterations=int(p.get("iterations", 0)),
                )
            case "gradient_boost":
                return GradientBoostModel(
                    n_features=n,
                    spec=spec,
                    base_score=float(p["base_score"]),
                    trees=tuple(TreeNode.from_dict(tree) for tree in p["trees"]),
                )
            case "decision_tree":
                return DecisionTreeModel(
                    n_features=n, spec=spec, root=TreeNode.from_dict(p["root"])
                )
            case "svm":
                return SvmModel(
                    n_features=n,
                    spec=spec,
                    support_vectors=_matrix(p["support_vectors"], n),
                    support_indices=np.asarray(p["support_indices"], dtype=np.int64),
                    alphas=np.asarray(p["alphas"], dtype=np.float64),
                    support_labels=np.asarray(p["support_labels"], dtype=np.float64),
                    bias=float(p["bias"]),
                    diagnostics=dict(p.get("diagnostics", {})),
                )
            case "mlp":
                return MlpModel(
                    n_features=n,
                    spec=spec,
                    hidden_weights=np.asarray(p["hidden_weights"], dtype=np.float64).reshape(
                        n, spec.hidden_units
                    ),
                    hidden_bias=np.asarray(p["hidden_bias"], dtype=np.float64),
                    output_weights=np.asarray(p["output_weights"], dtype=np.float64),
                    output_bias=float(p["output_bias"]),
                )
    except ModelFormatError:
        raise
    except ValidationError as exc:
        raise ModelFormatError(f"invalid model spec: {exc.errors()[0]['msg']}") from exc
    except (KeyError, TypeError, ValueError) as exc:
        raise ModelFormatError(f"malformed model document: {exc!r}") from exc
    raise ModelFormatError(f"unknown model family '{spec.kind}'")


def save_model(model: TrainedModel, path: str | Path) -> Path:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(json.dumps(dump_model(model), indent=2) + "\n", encoding="utf-8")
    return target


def read_model(path: str | Path) -> TrainedModel:
    try:
        document = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ModelFormatError(f"{path}: invalid JSON ({exc.msg})") from exc
    return load_model(document)
