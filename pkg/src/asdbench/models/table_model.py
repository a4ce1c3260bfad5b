"""Tabular data models: attribute schema, raw tables and numeric datasets."""

from collections import Counter
from dataclasses import dataclass, field
from enum import StrEnum

import numpy as np

from asdbench.exceptions import EncodingError, ParseError


MISSING = None
YES_VALUES = frozenset({"yes"})
NO_VALUES = frozenset({"no"})

Cell = str | None


class AttributeKind(StrEnum):
    """Kinds of attribute found in the screening files."""

    BINARY_SCORE = "binary_score"
    BOOLEAN = "boolean"
    CATEGORICAL = "categorical"
    NUMERIC = "numeric"
    CLASS_LABEL = "class_label"


@dataclass(frozen=True)
class AttributeSpec:
    """One declared column.

    Attributes:
        name: Column identifier, unique within a schema.
        kind: How cells of this column are validated and encoded.
        values: Declared value set for categorical and class columns, in
            declaration order. Empty for the other kinds.
    """

    name: str
    kind: AttributeKind
    values: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.name:
            raise ValueError("attribute name must not be empty")
        if self.kind is AttributeKind.CATEGORICAL and not self.values:
            raise ValueError(f"categorical attribute '{self.name}' has an empty value set")

    def normalize(self, raw: str) -> str:
        """Return the canonical text of a present cell or raise ``ValueError``.

        Booleans and class labels are matched case-insensitively and
        canonicalised to ``yes``/``no`` and ``YES``/``NO``.
        """
        text = raw.strip()
        match self.kind:
            case AttributeKind.BINARY_SCORE:
                if text not in ("0", "1"):
                    raise ValueError(f"'{text}' is not a 0/1 score")
                return text
            case AttributeKind.BOOLEAN:
                folded = text.casefold()
                if folded not in YES_VALUES | NO_VALUES:
                    raise ValueError(f"'{text}' is not yes/no")
                return folded
            case AttributeKind.CLASS_LABEL:
                folded = text.casefold()
                if folded not in YES_VALUES | NO_VALUES:
                    raise ValueError(f"'{text}' is not a YES/NO class value")
                return folded.upper()
            case AttributeKind.NUMERIC:
                value = float(text)
                if not np.isfinite(value):
                    raise ValueError(f"'{text}' is not a finite number")
                return text
            case AttributeKind.CATEGORICAL:
                if text not in self.values:
                    raise ValueError(
                        f"'{text}' is not one of the {len(self.values)} declared values"
                    )
                return text
        raise AssertionError(self.kind)


def validate_schema(schema: tuple[AttributeSpec, ...]) -> None:
    """Check name uniqueness and the single-class-column rule."""
    duplicated = [name for name, count in Counter(a.name for a in schema).items() if count > 1]
    if duplicated:
        raise ParseError(f"duplicate attribute names: {', '.join(duplicated)}")
    classes = [a.name for a in schema if a.kind is AttributeKind.CLASS_LABEL]
    if len(classes) != 1:
        raise ParseError(f"expected exactly one class attribute, found {len(classes)}")


@dataclass(frozen=True)
class RawTable:
    """Parsed, schema-tagged rows before numeric encoding.

    Present cells hold canonical text (see :meth:`AttributeSpec.normalize`);
    missing cells are ``None``.
    """

    schema: tuple[AttributeSpec, ...]
    rows: tuple[tuple[Cell, ...], ...]
    relation: str = "table"

    def __post_init__(self):
        width = len(self.schema)
        for index, row in enumerate(self.rows):
            if len(row) != width:
                raise ParseError(
                    f"row {index} has {len(row)} cells, schema declares {width}"
                )

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(a.name for a in self.schema)

    @property
    def class_attribute(self) -> AttributeSpec:
        return next(a for a in self.schema if a.kind is AttributeKind.CLASS_LABEL)

    def index_of(self, name: str) -> int:
        return self.names.index(name)

    def missing_counts(self) -> dict[str, int]:
        """Missing-cell count per attribute, in schema order."""
        counts = [0] * len(self.schema)
        for row in self.rows:
            for position, cell in enumerate(row):
                if cell is MISSING:
                    counts[position] += 1
        return dict(zip(self.names, counts, strict=True))

    def rows_with_missing(self) -> int:
        return sum(1 for row in self.rows if MISSING in row)

    def __len__(self) -> int:
        return len(self.rows)


@dataclass(frozen=True, eq=False)
class Dataset:
    """Dense numeric features with binary labels.

    Attributes:
        features: ``n x d`` float matrix, finite everywhere.
        labels: ``n`` vector of 0/1 (1 = class ``YES``).
        feature_names: ``d`` column identifiers.
    """

    features: np.ndarray
    labels: np.ndarray
    feature_names: tuple[str, ...]

    def __post_init__(self):
        features = np.asarray(self.features, dtype=np.float64)
        labels = np.asarray(self.labels).astype(np.int64)
        if features.ndim != 2:
            raise EncodingError(f"features must be 2-D, got shape {features.shape}")
        if labels.shape != (features.shape[0],):
            raise EncodingError(
                f"{labels.shape[0]} labels for {features.shape[0]} feature rows"
            )
        if len(self.feature_names) != features.shape[1]:
            raise EncodingError(
                f"{len(self.feature_names)} names for {features.shape[1]} columns"
            )
        if not np.all(np.isfinite(features)):
            raise EncodingError("features contain NaN or infinite values")
        if labels.size and not np.all((labels == 0) | (labels == 1)):
            raise EncodingError("labels must be 0 or 1")
        features.setflags(write=False)
        labels.setflags(write=False)
        object.__setattr__(self, "features", features)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "feature_names", tuple(self.feature_names))

    @property
    def n_samples(self) -> int:
        return int(self.features.shape[0])

    @property
    def n_features(self) -> int:
        return int(self.features.shape[1])

    def subset(self, indices: np.ndarray | list[int]) -> "Dataset":
        """Rows at ``indices``, in that order."""
        index = np.asarray(indices, dtype=np.int64)
        return Dataset(self.features[index], self.labels[index], self.feature_names)

    def with_features(self, features: np.ndarray) -> "Dataset":
        return Dataset(features, self.labels, self.feature_names)

    def class_counts(self) -> tuple[int, int]:
        positives = int(self.labels.sum())
        return self.n_samples - positives, positives

    def __len__(self) -> int:
        return self.n_samples


@dataclass(frozen=True, eq=False)
class ScalerParams:
    """Per-column standardization statistics fitted on training data.

    ``stds`` keeps zero for constant columns; those columns transform to 0.
    """

    means: np.ndarray
    stds: np.ndarray = field(repr=False)

    def transform(self, features: np.ndarray) -> np.ndarray:
        if features.shape[1] != self.means.shape[0]:
            raise EncodingError(
                f"scaler fitted on {self.means.shape[0]} columns, got {features.shape[1]}"
            )
        constant = self.stds == 0.0
        safe_stds = np.where(constant, 1.0, self.stds)
        scaled = (features - self.means) / safe_stds
        scaled[:, constant] = 0.0
        return scaled
