"""Tabular ML toolkit and benchmark CLI for autism-screening questionnaires.

Provides:
- ARFF/CSV ingestion, merging, missing-row removal and one-hot encoding
- Seven classifiers written on numpy (NB, kNN, LR, GB, SVM/SMO, DT, MLP)
- Accuracy, per-class precision/recall/F1, tie-correct ROC and AUC
- Comparison tables, ROC SVGs and a reproducible JSON report
"""

from importlib.metadata import PackageNotFoundError, version

from .exceptions import AsdBenchError


try:
    __version__ = version("asdbench")
except PackageNotFoundError:
    __version__ = "0.0.0"


__all__ = ["AsdBenchError", "__version__"]
