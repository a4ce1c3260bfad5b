"""Ingestion pipeline: parse, merge, clean, encode, split and standardize.

Every function is pure over immutable inputs; file access is confined to
:func:`read_source`.
"""

import logging
from collections.abc import Iterable, Mapping
from pathlib import Path
from typing import BinaryIO, Literal

import numpy as np

from asdbench.exceptions import (
    DataError,
    EncodingError,
    ParseError,
    SchemaMismatchError,
    SplitError,
)
from asdbench.helpers.parsers import parse_arff, parse_csv, parse_schema_sidecar
from asdbench.helpers.prng_helper import shuffled_indices
from asdbench.models.experiment_model import DataSource
from asdbench.models.table_model import (
    MISSING,
    AttributeKind,
    AttributeSpec,
    Dataset,
    RawTable,
    ScalerParams,
)


logger = logging.getLogger(__name__)

Vocabulary = Mapping[str, tuple[str, ...]]
SidecarKinds = dict[str, tuple[AttributeKind, tuple[str, ...]]]


def _decode(source: bytes | str | BinaryIO, name: str) -> str:
    if isinstance(source, str):
        return source
    raw = source if isinstance(source, bytes) else source.read()
    try:
        return raw.decode("utf-8-sig")
    except UnicodeDecodeError as exc:
        raise ParseError(f"not valid UTF-8 at byte {exc.start}", source=name) from exc


def parse_table(
    source: bytes | str | BinaryIO,
    fmt: Literal["arff", "csv"],
    *,
    class_attribute: str | None = None,
    kinds: SidecarKinds | None = None,
    name: str = "",
) -> RawTable:
    """Parse one ARFF or CSV document.

    Args:
        source: Raw bytes, a binary stream, or already-decoded text.
        fmt: ``arff`` or ``csv``.
        class_attribute: ARFF class column; the last attribute when ``None``.
        kinds: Sidecar kinds, required for CSV.
        name: Source name used in error messages.

    Raises:
        ParseError: Malformed content; the message carries the line number.
    """
    text = _decode(source, name)
    if fmt == "arff":
        table = parse_arff(text, class_attribute=class_attribute, source=name)
    elif fmt == "csv":
        if kinds is None:
            raise ParseError("CSV input needs a sidecar schema", source=name)
        table = parse_csv(text, kinds, source=name)
    else:
        raise ParseError(f"unknown format '{fmt}'", source=name)

    if class_attribute is not None and table.class_attribute.name != class_attribute:
        raise ParseError(
            f"class attribute '{class_attribute}' not found"
            f" (class column is '{table.class_attribute.name}')",
            source=name,
        )
    logger.debug("Parsed %s: %d rows, %d attributes", name or fmt, len(table), len(table.schema))
    return table


def read_source(source: DataSource, *, class_attribute: str | None = None) -> RawTable:
    """Read and parse the file described by ``source``.

    Raises:
        DataError: The file (or its sidecar) cannot be read.
        ParseError: The content is malformed.
    """
    path = Path(source.path)
    try:
        payload = path.read_bytes()
        kinds = None
        if source.format == "csv" and source.schema_path is not None:
            sidecar = Path(source.schema_path)
            kinds = parse_schema_sidecar(
                sidecar.read_text(encoding="utf-8-sig"), source=sidecar.name
            )
    except OSError as exc:
        raise DataError(f"cannot read '{exc.filename}': {exc.strerror}") from exc

    table = parse_table(
        payload,
        source.format or "arff",
        class_attribute=class_attribute,
        kinds=kinds,
        name=path.name,
    )
    logger.info("Read %s: %d rows, %d attributes", path.name, len(table), len(table.schema))
    return table


def merge_tables(tables: list[RawTable]) -> RawTable:
    """Concatenate tables whose schemas hold the same attribute names.

    Columns follow the first table's order; rows of later tables are
    re-aligned by name. Categorical value sets are unioned and sorted.

    Raises:
        SchemaMismatchError: Name sets differ, or a name has different kinds.
    """
    if not tables:
        raise SchemaMismatchError("nothing to merge")
    first = tables[0]
    if len(tables) == 1:
        return first

    names = first.names
    reference = set(names)
    for position, table in enumerate(tables[1:], start=2):
        other = set(table.names)
        if other != reference:
            missing = sorted(reference - other)
            extra = sorted(other - reference)
            details = []
            if missing:
                details.append(f"missing {', '.join(missing)}")
            if extra:
                details.append(f"unexpected {', '.join(extra)}")
            raise SchemaMismatchError(
                f"table {position} ({table.relation}) does not match table 1: {'; '.join(details)}"
            )

    schema: list[AttributeSpec] = []
    for attribute in first.schema:
        specs = [table.schema[table.index_of(attribute.name)] for table in tables]
        kinds = {spec.kind for spec in specs}
        if len(kinds) > 1:
            listed = ", ".join(sorted(kind.value for kind in kinds))
            raise SchemaMismatchError(f"attribute '{attribute.name}' has kinds {listed}")
        values = attribute.values
        if attribute.kind is AttributeKind.CATEGORICAL:
            values = tuple(sorted({value for spec in specs for value in spec.values}))
        schema.append(AttributeSpec(attribute.name, attribute.kind, values))

    rows = list(first.rows)
    for table in tables[1:]:
        order = [table.index_of(name) for name in names]
        rows.extend(tuple(row[i] for i in order) for row in table.rows)

    merged = RawTable(
        schema=tuple(schema),
        rows=tuple(rows),
        relation="+".join(table.relation for table in tables),
    )
    logger.info("Merged %d tables into %d rows", len(tables), len(merged))
    return merged


def drop_missing(table: RawTable) -> tuple[RawTable, int]:
    """Rows without any missing cell, in original order, and the dropped count."""
    kept = tuple(row for row in table.rows if MISSING not in row)
    dropped = len(table) - len(kept)
    if dropped:
        logger.info("Dropped %d of %d rows with missing values", dropped, len(table))
    return RawTable(schema=table.schema, rows=kept, relation=table.relation), dropped


def build_vocabulary(table: RawTable, exclude: Iterable[str] = ()) -> dict[str, tuple[str, ...]]:
    """Sorted observed values of every categorical attribute."""
    skipped = set(exclude)
    vocabulary: dict[str, tuple[str, ...]] = {}
    for position, attribute in enumerate(table.schema):
        if attribute.kind is not AttributeKind.CATEGORICAL or attribute.name in skipped:
            continue
        observed = {row[position] for row in table.rows if row[position] is not MISSING}
        vocabulary[attribute.name] = tuple(sorted(observed))  # type: ignore[type-var]
    return vocabulary


def _numeric_value(attribute: AttributeSpec, cell: str) -> float:
    match attribute.kind:
        case AttributeKind.BOOLEAN:
            return 1.0 if cell == "yes" else 0.0
        case AttributeKind.BINARY_SCORE | AttributeKind.NUMERIC:
            return float(cell)
    raise AssertionError(attribute.kind)


def encode(
    table: RawTable,
    *,
    exclude: Iterable[str] = (),
    vocabulary: Vocabulary | None = None,
) -> Dataset:
    """Turn a clean table into a numeric dataset.

    Binary scores and numerics pass through, booleans map yes/no to 1/0,
    each categorical attribute becomes one ``name=value`` indicator column
    per vocabulary value (sorted), and the class column becomes the labels
    (``YES`` = 1).

    Args:
        table: Table without missing cells.
        exclude: Attribute names dropped before encoding; unknown names are
            ignored.
        vocabulary: Categorical value lists; observed values when ``None``.

    Raises:
        EncodingError: Missing cells, an excluded class column, or a
            categorical value outside ``vocabulary``.
    """
    excluded = set(exclude)
    class_name = table.class_attribute.name
    if class_name in excluded:
        raise EncodingError(f"class attribute '{class_name}' cannot be excluded")
    if table.rows_with_missing():
        raise EncodingError("table has missing cells; drop them before encoding")
    if vocabulary is None:
        vocabulary = build_vocabulary(table, excluded)

    n_rows = len(table)
    columns: list[np.ndarray] = []
    names: list[str] = []
    labels = np.zeros(n_rows, dtype=np.int64)

    for position, attribute in enumerate(table.schema):
        cells = [row[position] for row in table.rows]
        if attribute.kind is AttributeKind.CLASS_LABEL:
            labels = np.array([1 if cell == "YES" else 0 for cell in cells], dtype=np.int64)
            continue
        if attribute.name in excluded:
            continue
        if attribute.kind is AttributeKind.CATEGORICAL:
            values = vocabulary.get(attribute.name, ())
            index = {value: i for i, value in enumerate(values)}
            block = np.zeros((n_rows, len(values)), dtype=np.float64)
            for row, cell in enumerate(cells):
                if cell not in index:
                    raise EncodingError(
                        f"value '{cell}' of '{attribute.name}' is not in the encoding vocabulary"
                    )
                block[row, index[cell]] = 1.0
            columns.extend(block.T)
            names.extend(f"{attribute.name}={value}" for value in values)
        else:
            columns.append(
                np.array([_numeric_value(attribute, cell) for cell in cells], dtype=np.float64)
            )
            names.append(attribute.name)

    features = np.column_stack(columns) if columns else np.zeros((n_rows, 0))
    dataset = Dataset(features=features, labels=labels, feature_names=tuple(names))
    logger.info(
        "Encoded %d rows into %d features (%d excluded attributes)",
        dataset.n_samples,
        dataset.n_features,
        len(excluded & set(table.names)),
    )
    return dataset


def split_indices(n: int, train_fraction: float, seed: int) -> tuple[np.ndarray, np.ndarray]:
    """Seeded ``(train_indices, test_indices)``, both in shuffled order.

    Raises:
        SplitError: Negative seed, fraction outside ``(0, 1)``, ``n < 2`` or
            an empty part.
    """
    if seed < 0:
        raise SplitError(f"seed must be non-negative, got {seed}")
    if not 0.0 < train_fraction < 1.0:
        raise SplitError(f"train_fraction must lie in (0, 1), got {train_fraction}")
    if n < 2:
        raise SplitError(f"need at least 2 rows to split, got {n}")
    n_train = int(np.floor(train_fraction * n))
    if n_train == 0 or n_train == n:
        raise SplitError(
            f"train_fraction {train_fraction} on {n} rows leaves an empty part"
        )
    order = shuffled_indices(n, seed)
    return order[:n_train], order[n_train:]


def split(data: Dataset, train_fraction: float, seed: int) -> tuple[Dataset, Dataset]:
    """Seeded train/test partition; train size is ``floor(train_fraction * n)``."""
    train_idx, test_idx = split_indices(data.n_samples, train_fraction, seed)
    return data.subset(train_idx), data.subset(test_idx)


def fit_scaler(train: Dataset) -> ScalerParams:
    if train.n_samples == 0:
        raise EncodingError("cannot fit a scaler on an empty training set")
    return ScalerParams(
        means=train.features.mean(axis=0),
        stds=train.features.std(axis=0),
    )


def standardize(train: Dataset, test: Dataset) -> tuple[Dataset, Dataset, ScalerParams]:
    """Z-score both splits with statistics of ``train`` (population std).

    Constant training columns map to 0 in both splits.

    Raises:
        EncodingError: Empty train or different feature counts.
    """
    if train.n_features != test.n_features:
        raise EncodingError(
            f"train has {train.n_features} features, test has {test.n_features}"
        )
    params = fit_scaler(train)
    return (
        train.with_features(params.transform(train.features)),
        test.with_features(params.transform(test.features)),
        params,
    )
