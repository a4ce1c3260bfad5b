"""Evaluation results: confusion counts, per-class scores and ROC curves."""

from dataclasses import asdict, dataclass, field
from typing import Any


@dataclass(frozen=True)
class ConfusionMatrix:
    """Counts with the positive class = label 1 = ``YES``."""

    tp: int
    fp: int
    tn: int
    fn: int

    def __post_init__(self):
        if min(self.tp, self.fp, self.tn, self.fn) < 0:
            raise ValueError("confusion counts must be non-negative")

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.tn + self.fn


@dataclass(frozen=True)
class ClassMetrics:
    precision: float
    recall: float
    f1: float


@dataclass(frozen=True)
class PrfReport:
    """Accuracy plus precision/recall/F1 for both classes.

    Attributes:
        degenerate: Names of metrics that hit a 0/0 and were set to 0.
    """

    accuracy: float
    no: ClassMetrics
    yes: ClassMetrics
    degenerate: tuple[str, ...] = ()


@dataclass(frozen=True)
class RocCurve:
    """Ordered ``(fpr, tpr)`` points from ``(0, 0)`` to ``(1, 1)``."""

    points: tuple[tuple[float, float], ...]

    def __post_init__(self):
        if len(self.points) < 2:
            raise ValueError("a ROC curve needs at least two points")
        if self.points[0] != (0.0, 0.0) or self.points[-1] != (1.0, 1.0):
            raise ValueError("ROC curve must start at (0, 0) and end at (1, 1)")
        for (x0, y0), (x1, y1) in zip(self.points, self.points[1:], strict=False):
            if x1 < x0 or y1 < y0:
                raise ValueError("ROC coordinates must be non-decreasing")

    @property
    def fpr(self) -> list[float]:
        return [p[0] for p in self.points]

    @property
    def tpr(self) -> list[float]:
        return [p[1] for p in self.points]


@dataclass(frozen=True)
class MetricReport:
    """Everything one learner scored on one test split."""

    accuracy: float
    auc: float
    no: ClassMetrics
    yes: ClassMetrics
    confusion: ConfusionMatrix
    roc: RocCurve
    degenerate: tuple[str, ...] = field(default=())

    def table_values(self) -> dict[str, float]:
        """The eight rows of the comparison table, in table order."""
        return {
            "Acc": self.accuracy,
            "AUC": self.auc,
            "Pre (no)": self.no.precision,
            "Pre (yes)": self.yes.precision,
            "Rec (no)": self.no.recall,
            "Rec (yes)": self.yes.recall,
            "F1 (no)": self.no.f1,
            "F1 (yes)": self.yes.f1,
        }

    def to_dict(self) -> dict[str, Any]:
        data = asdict(self)
        data["roc"] = [list(point) for point in self.roc.points]
        data["degenerate"] = list(self.degenerate)
        return data

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "MetricReport":
        return cls(
            accuracy=float(data["accuracy"]),
            auc=float(data["auc"]),
            no=ClassMetrics(**data["no"]),
            yes=ClassMetrics(**data["yes"]),
            confusion=ConfusionMatrix(**data["confusion"]),
            roc=RocCurve(tuple((float(x), float(y)) for x, y in data["roc"])),
            degenerate=tuple(data.get("degenerate", ())),
        )


TABLE_ROWS: tuple[str, ...] = (
    "Acc",
    "AUC",
    "Pre (no)",
    "Pre (yes)",
    "Rec (no)",
    "Rec (yes)",
    "F1 (no)",
    "F1 (yes)",
)
