"""Report bundle produced by one experiment run."""

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .metric_model import MetricReport


REPORT_FORMAT_VERSION = 1


@dataclass(frozen=True)
class SampleComparison:
    """First test rows (post-shuffle order) with actual and predicted labels."""

    columns: tuple[str, ...]
    rows: tuple[tuple[int, ...], ...]

    def to_dict(self) -> dict[str, Any]:
        return {"columns": list(self.columns), "rows": [list(row) for row in self.rows]}


@dataclass(frozen=True)
class SeedRun:
    """Results for one split seed.

    Attributes:
        seed: Split seed.
        train_size: Training rows.
        test_size: Test rows.
        test_indices: Row indices (into the encoded dataset) of the test split,
            in post-shuffle order.
        actual: Test labels in that order.
        classifiers: Per-learner metrics, in config order.
        kernels: Per-kernel SVM metrics, keyed by kernel label.
        predictions: Test labels predicted by every learner and kernel.
        hyperparameters: Resolved spec of every fitted model, including
            data-dependent kernel parameters.
        diagnostics: Solver counters per model, when the learner reports any.
    """

    seed: int
    train_size: int
    test_size: int
    test_indices: tuple[int, ...]
    actual: tuple[int, ...]
    classifiers: dict[str, MetricReport]
    kernels: dict[str, MetricReport]
    predictions: dict[str, tuple[int, ...]]
    hyperparameters: dict[str, dict[str, Any]]
    diagnostics: dict[str, dict[str, Any]] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "seed": self.seed,
            "train_size": self.train_size,
            "test_size": self.test_size,
            "test_indices": list(self.test_indices),
            "actual": list(self.actual),
            "classifiers": {k: v.to_dict() for k, v in self.classifiers.items()},
            "kernels": {k: v.to_dict() for k, v in self.kernels.items()},
            "predictions": {k: list(v) for k, v in self.predictions.items()},
            "hyperparameters": self.hyperparameters,
            "diagnostics": self.diagnostics,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "SeedRun":
        return cls(
            seed=int(data["seed"]),
            train_size=int(data["train_size"]),
            test_size=int(data["test_size"]),
            test_indices=tuple(data["test_indices"]),
            actual=tuple(data["actual"]),
            classifiers={k: MetricReport.from_dict(v) for k, v in data["classifiers"].items()},
            kernels={k: MetricReport.from_dict(v) for k, v in data["kernels"].items()},
            predictions={k: tuple(v) for k, v in data["predictions"].items()},
            hyperparameters=data["hyperparameters"],
            diagnostics=data.get("diagnostics", {}),
        )


@dataclass(frozen=True)
class RunMetadata:
    """What is needed to rerun and audit the experiment.

    Attributes:
        config: Resolved config document (a valid config file).
        rows_parsed: Rows read from every input, before cleaning.
        rows_dropped: Rows removed because a cell was missing.
        rows_used: Rows after cleaning.
        feature_names: Encoded columns, in matrix order.
        excluded_attributes: Attributes dropped before encoding.
        class_balance: ``[n_no, n_yes]`` of the cleaned data.
    """

    config: dict[str, Any]
    rows_parsed: int
    rows_dropped: int
    rows_used: int
    feature_names: tuple[str, ...]
    excluded_attributes: tuple[str, ...]
    class_balance: tuple[int, int]

    @property
    def encoded_dimension(self) -> int:
        return len(self.feature_names)

    def to_dict(self) -> dict[str, Any]:
        return {
            "config": self.config,
            "rows_parsed": self.rows_parsed,
            "rows_dropped": self.rows_dropped,
            "rows_used": self.rows_used,
            "encoded_dimension": self.encoded_dimension,
            "feature_names": list(self.feature_names),
            "excluded_attributes": list(self.excluded_attributes),
            "class_balance": list(self.class_balance),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "RunMetadata":
        return cls(
            config=data["config"],
            rows_parsed=int(data["rows_parsed"]),
            rows_dropped=int(data["rows_dropped"]),
            rows_used=int(data["rows_used"]),
            feature_names=tuple(data["feature_names"]),
            excluded_attributes=tuple(data["excluded_attributes"]),
            class_balance=(int(data["class_balance"][0]), int(data["class_balance"][1])),
        )


@dataclass(frozen=True)
class SummaryStats:
    """Mean and population standard deviation over seeds."""

    mean: float
    std: float

    @classmethod
    def of(cls, values: list[float]) -> "SummaryStats":
        array = np.asarray(values, dtype=np.float64)
        return cls(mean=float(array.mean()), std=float(array.std()))


@dataclass(frozen=True)
class ReportBundle:
    """Per-seed runs plus the metadata to reproduce them."""

    metadata: RunMetadata
    runs: tuple[SeedRun, ...]
    sample: SampleComparison

    @property
    def first_run(self) -> SeedRun:
        return self.runs[0]

    @property
    def classifier_names(self) -> list[str]:
        return list(self.first_run.classifiers)

    @property
    def kernel_names(self) -> list[str]:
        return list(self.first_run.kernels)

    def mean_table(self, section: str) -> dict[str, dict[str, float]]:
        """Per-name mean of each comparison-table row over all seeds.

        Args:
            section: ``"classifiers"`` or ``"kernels"``.
        """
        names = self.classifier_names if section == "classifiers" else self.kernel_names
        table: dict[str, dict[str, float]] = {}
        for name in names:
            per_seed = [getattr(run, section)[name].table_values() for run in self.runs]
            table[name] = {
                row: float(np.mean([values[row] for values in per_seed]))
                for row in per_seed[0]
            }
        return table

    def summary(self, section: str) -> dict[str, dict[str, SummaryStats]]:
        names = self.classifier_names if section == "classifiers" else self.kernel_names
        return {
            name: {
                "accuracy": SummaryStats.of(
                    [getattr(run, section)[name].accuracy for run in self.runs]
                ),
                "auc": SummaryStats.of([getattr(run, section)[name].auc for run in self.runs]),
            }
            for name in names
        }

    def to_dict(self) -> dict[str, Any]:
        return {
            "format_version": REPORT_FORMAT_VERSION,
            "metadata": self.metadata.to_dict(),
            "summary": {
                section: {
                    name: {metric: vars(stats) for metric, stats in metrics.items()}
                    for name, metrics in self.summary(section).items()
                }
                for section in ("classifiers", "kernels")
            },
            "runs": [run.to_dict() for run in self.runs],
            "sample_comparison": self.sample.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ReportBundle":
        version = data.get("format_version")
        if version != REPORT_FORMAT_VERSION:
            raise ValueError(f"unsupported report format version: {version}")
        sample = data["sample_comparison"]
        return cls(
            metadata=RunMetadata.from_dict(data["metadata"]),
            runs=tuple(SeedRun.from_dict(run) for run in data["runs"]),
            sample=SampleComparison(
                columns=tuple(sample["columns"]),
                rows=tuple(tuple(row) for row in sample["rows"]),
            ),
        )
