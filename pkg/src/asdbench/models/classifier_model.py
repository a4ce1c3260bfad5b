"""Hyperparameter specifications for the seven learners.

Defaults are the conventional values every report echoes; ranges are
enforced by pydantic so a bad config fails at load time.
"""

from typing import Annotated, ClassVar, Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator

from .kernel_model import KernelSpec, RbfKernel


class _ClassifierBase(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    # Scale-sensitive learners consume standardized features.
    STANDARDIZED: ClassVar[bool] = False
    SHORT_NAME: ClassVar[str] = ""

    name: str | None = Field(
        default=None,
        description="Report column name; defaults to the learner's short name.",
    )

    @property
    def display_name(self) -> str:
        return self.name or self.SHORT_NAME


class NaiveBayesSpec(_ClassifierBase):
    SHORT_NAME: ClassVar[str] = "NB"

    kind: Literal["naive_bayes"] = "naive_bayes"
    alpha: float = Field(default=1.0, gt=0)


class KnnSpec(_ClassifierBase):
    STANDARDIZED: ClassVar[bool] = True
    SHORT_NAME: ClassVar[str] = "kNN"

    kind: Literal["knn"] = "knn"
    k: int = Field(default=5, ge=1)

    @field_validator("k")
    @classmethod
    def _odd(cls, value: int) -> int:
        if value % 2 == 0:
            raise ValueError("k must be odd")
        return value


class LogisticSpec(_ClassifierBase):
    STANDARDIZED: ClassVar[bool] = True
    SHORT_NAME: ClassVar[str] = "LR"

    kind: Literal["logistic"] = "logistic"
    learning_rate: float = Field(default=0.1, gt=0)
    l2_lambda: float = Field(default=1e-4, ge=0)
    max_iters: int = Field(default=2000, ge=0)
    grad_tol: float = Field(default=1e-6, ge=0)


class GradientBoostSpec(_ClassifierBase):
    SHORT_NAME: ClassVar[str] = "GB"

    kind: Literal["gradient_boost"] = "gradient_boost"
    rounds: int = Field(default=100, ge=0)
    max_depth: int = Field(default=3, ge=1)
    shrinkage: float = Field(default=0.1, gt=0, le=1)


class DecisionTreeSpec(_ClassifierBase):
    SHORT_NAME: ClassVar[str] = "DT"

    kind: Literal["decision_tree"] = "decision_tree"
    max_depth: int | None = Field(default=10, ge=0)
    min_leaf: int = Field(default=2, ge=1)


class SvmSpec(_ClassifierBase):
    STANDARDIZED: ClassVar[bool] = True
    SHORT_NAME: ClassVar[str] = "SVM"

    kind: Literal["svm"] = "svm"
    C: float = Field(default=1.0, gt=0)
    kernel: KernelSpec = Field(default_factory=RbfKernel)
    tol: float = Field(default=1e-3, gt=0)
    eps: float = Field(default=1e-5, gt=0)
    max_passes: int = Field(default=10, ge=1)
    max_iters: int = Field(default=100_000, ge=1)


class MlpSpec(_ClassifierBase):
    STANDARDIZED: ClassVar[bool] = True
    SHORT_NAME: ClassVar[str] = "MLP"

    kind: Literal["mlp"] = "mlp"
    hidden_units: int = Field(default=16, ge=1)
    learning_rate: float = Field(default=0.01, gt=0)
    epochs: int = Field(default=200, ge=0)
    init_seed: int = Field(default=0, ge=0)


ClassifierSpec = Annotated[
    NaiveBayesSpec
    | KnnSpec
    | LogisticSpec
    | GradientBoostSpec
    | SvmSpec
    | DecisionTreeSpec
    | MlpSpec,
    Field(discriminator="kind"),
]

# Column order of the classifier comparison table.
DEFAULT_CLASSIFIERS: tuple[
    NaiveBayesSpec
    | KnnSpec
    | LogisticSpec
    | GradientBoostSpec
    | SvmSpec
    | DecisionTreeSpec
    | MlpSpec,
    ...,
] = (
    NaiveBayesSpec(),
    KnnSpec(),
    LogisticSpec(),
    GradientBoostSpec(),
    SvmSpec(),
    DecisionTreeSpec(),
    MlpSpec(),
)
