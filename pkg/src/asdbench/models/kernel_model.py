"""SVM kernel specifications.

``gamma`` may be left unset in a config; :meth:`resolved` fills it from the
training matrix before fitting, so every fitted model carries concrete values.
"""

from typing import Annotated, Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field


KERNEL_PREFIX = "SVM-"


class _KernelBase(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    name: str | None = Field(
        default=None,
        description="Sweep column name; defaults to the kernel label.",
    )

    @property
    def label(self) -> str:
        return self.name or KERNEL_LABELS[self.kind]  # type: ignore[attr-defined]

    @property
    def sweep_key(self) -> str:
        """Name of the sweep SVM in model files and the sample table."""
        return f"{KERNEL_PREFIX}{self.label}"

    @property
    def is_resolved(self) -> bool:
        return getattr(self, "gamma", 1.0) is not None

    def resolved(self, X: np.ndarray) -> "KernelSpec":
        return self  # type: ignore[return-value]


def scale_gamma(X: np.ndarray) -> float:
    """``1 / (d * mean column variance)``; falls back to ``1 / d`` for constant data."""
    d = X.shape[1]
    mean_variance = float(np.mean(np.var(X, axis=0))) if X.size else 0.0
    if mean_variance <= 0.0:
        return 1.0 / d
    return 1.0 / (d * mean_variance)


class LinearKernel(_KernelBase):
    kind: Literal["linear"] = "linear"


class PolynomialKernel(_KernelBase):
    kind: Literal["polynomial"] = "polynomial"
    degree: int = Field(default=3, ge=1)
    gamma: float | None = Field(default=None, gt=0)
    coef0: float = 1.0

    def resolved(self, X: np.ndarray) -> "PolynomialKernel":
        if self.gamma is not None:
            return self
        return self.model_copy(update={"gamma": 1.0 / X.shape[1]})


class RbfKernel(_KernelBase):
    kind: Literal["rbf"] = "rbf"
    gamma: float | None = Field(default=None, gt=0)

    def resolved(self, X: np.ndarray) -> "RbfKernel":
        if self.gamma is not None:
            return self
        return self.model_copy(update={"gamma": scale_gamma(X)})


class SigmoidKernel(_KernelBase):
    kind: Literal["sigmoid"] = "sigmoid"
    gamma: float | None = Field(default=None, gt=0)
    coef0: float = 0.0

    def resolved(self, X: np.ndarray) -> "SigmoidKernel":
        if self.gamma is not None:
            return self
        return self.model_copy(update={"gamma": 1.0 / X.shape[1]})


KernelSpec = Annotated[
    LinearKernel | PolynomialKernel | RbfKernel | SigmoidKernel,
    Field(discriminator="kind"),
]

KERNEL_LABELS: dict[str, str] = {
    "linear": "Linear",
    "polynomial": "Polynomial",
    "rbf": "Gaussian",
    "sigmoid": "Sigmoid",
}

DEFAULT_SWEEP: tuple[LinearKernel | PolynomialKernel | RbfKernel | SigmoidKernel, ...] = (
    PolynomialKernel(),
    RbfKernel(),
    SigmoidKernel(),
)
