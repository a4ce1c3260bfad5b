"""Experiment configuration schema.

The schema is strict: unknown keys are rejected so a typo never silently
falls back to a default. The resolved model dumps back to a valid config.
"""

from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .classifier_model import DEFAULT_CLASSIFIERS, ClassifierSpec
from .kernel_model import DEFAULT_SWEEP, KernelSpec


DataFormat = Literal["arff", "csv"]


class DataSource(BaseModel):
    """One input file.

    Attributes:
        path: File location; relative paths resolve against the config file.
        format: ``arff`` or ``csv``; inferred from the suffix when omitted.
        schema_path: ``name=kind`` sidecar, required for CSV.
    """

    model_config = ConfigDict(extra="forbid", frozen=True, populate_by_name=True)

    path: Path
    format: DataFormat | None = None
    schema_path: Path | None = Field(default=None, alias="schema")

    @model_validator(mode="before")
    @classmethod
    def _infer_format(cls, data):
        if isinstance(data, dict) and data.get("format") is None and "path" in data:
            suffix = Path(str(data["path"])).suffix.lower().lstrip(".")
            if suffix not in ("arff", "csv"):
                raise ValueError(
                    f"cannot infer format of '{data['path']}'; set 'format' to arff or csv"
                )
            data = {**data, "format": suffix}
        return data

    @model_validator(mode="after")
    def _check_sidecar(self) -> "DataSource":
        if self.format == "csv" and self.schema_path is None:
            raise ValueError(f"CSV source '{self.path}' needs a 'schema' sidecar file")
        return self


class ExperimentConfig(BaseModel):
    """Fully resolved experiment description.

    Attributes:
        data: One to three input files, merged in order.
        class_attribute: Name of the class column.
        exclude_attributes: Columns dropped before encoding.
        train_fraction: Share of rows used for training.
        seed: First split seed; repeats use ``seed .. seed + repeat - 1``.
        repeat: Number of seeds.
        classifiers: Learners compared in the classifier table, in column order.
        kernels: Kernels for the SVM sweep.
        output_dir: Directory for every emitted file.
        sample_size: Rows in the actual-vs-predicted table.
        per_classifier_roc_svg: Also write one SVG per learner.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    data: list[DataSource] = Field(min_length=1, max_length=3)
    class_attribute: str = "Class/ASD"
    exclude_attributes: list[str] = Field(default_factory=lambda: ["age_desc", "result"])
    train_fraction: float = Field(default=0.7, gt=0, lt=1)
    seed: int = Field(default=42, ge=0)
    repeat: int = Field(default=1, ge=1)
    classifiers: list[ClassifierSpec] = Field(
        default_factory=lambda: list(DEFAULT_CLASSIFIERS)
    )
    kernels: list[KernelSpec] = Field(default_factory=lambda: list(DEFAULT_SWEEP))
    output_dir: Path = Path("results")
    sample_size: int = Field(default=10, ge=0)
    per_classifier_roc_svg: bool = False

    @field_validator("data", mode="before")
    @classmethod
    def _wrap_paths(cls, value):
        if isinstance(value, list):
            return [{"path": item} if isinstance(item, str) else item for item in value]
        return value

    @model_validator(mode="after")
    def _check_entries(self) -> "ExperimentConfig":
        if not self.classifiers and not self.kernels:
            raise ValueError("at least one classifier or kernel entry is required")
        names = [spec.display_name for spec in self.classifiers]
        duplicated = sorted({name for name in names if names.count(name) > 1})
        if duplicated:
            raise ValueError(
                f"duplicate classifier names {duplicated}; set 'name' to tell them apart"
            )
        labels = [kernel.label for kernel in self.kernels]
        repeated = sorted({label for label in labels if labels.count(label) > 1})
        if repeated:
            raise ValueError(
                f"duplicate kernel labels {repeated}; set 'name' on the kernel entries"
            )
        sweep_names = {kernel.sweep_key for kernel in self.kernels} | set(labels)
        clashes = sorted(set(names) & sweep_names)
        if clashes:
            raise ValueError(f"classifier names {clashes} collide with kernel sweep entries")
        return self

    @property
    def seeds(self) -> list[int]:
        return list(range(self.seed, self.seed + self.repeat))

    def to_document(self) -> dict:
        """JSON-ready dump that :func:`~asdbench.config.load_config` accepts."""
        return self.model_dump(mode="json", by_alias=True)
