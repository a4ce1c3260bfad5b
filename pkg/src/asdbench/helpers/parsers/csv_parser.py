"""CSV reader driven by a ``name=kind`` sidecar schema.

Sidecar lines look like ``gender=categorical``, ``A1_Score=binary_score``
or ``gender=categorical{f,m}``; blank lines and ``#`` comments are skipped.
Empty cells and ``?`` are missing.
"""

import csv
import io
import re

from asdbench.exceptions import ParseError
from asdbench.models.table_model import (
    AttributeKind,
    AttributeSpec,
    Cell,
    RawTable,
    validate_schema,
)

from .arff_parser import split_values


MISSING_MARKERS = frozenset({"", "?"})

_SIDECAR_RE = re.compile(
    r"^(?P<name>[^=]+?)\s*=\s*(?P<kind>[a-z_]+)\s*(?:\{(?P<values>.*)\})?\s*$"
)


def parse_schema_sidecar(
    text: str, *, source: str = ""
) -> dict[str, tuple[AttributeKind, tuple[str, ...]]]:
    """Parse sidecar text into ``{name: (kind, explicit_values)}`` in file order."""
    kinds: dict[str, tuple[AttributeKind, tuple[str, ...]]] = {}
    for line_no, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        match = _SIDECAR_RE.match(line)
        if match is None:
            raise ParseError(f"expected 'name=kind', got {line!r}", line=line_no, source=source)
        name = match["name"].strip()
        try:
            kind = AttributeKind(match["kind"])
        except ValueError as exc:
            raise ParseError(
                f"unknown kind '{match['kind']}' for '{name}'", line=line_no, source=source
            ) from exc
        if name in kinds:
            raise ParseError(f"'{name}' declared twice", line=line_no, source=source)
        values: tuple[str, ...] = ()
        if match["values"] is not None:
            values = tuple(
                dict.fromkeys(t.text for t in split_values(match["values"]) if t.text)
            )
        kinds[name] = (kind, values)
    return kinds


def parse_csv(
    text: str,
    kinds: dict[str, tuple[AttributeKind, tuple[str, ...]]],
    *,
    source: str = "",
) -> RawTable:
    """Parse CSV text (header row first) using sidecar kinds.

    Categorical columns without an explicit value set take the sorted set of
    observed values.

    Raises:
        ParseError: Header/sidecar disagreement, row arity mismatch, or an
            invalid cell; the message carries the line number.
    """
    reader = csv.reader(io.StringIO(text))
    try:
        header = [name.strip() for name in next(reader)]
    except StopIteration as exc:
        raise ParseError("empty CSV file", line=1, source=source) from exc

    unknown = [name for name in header if name not in kinds]
    if unknown:
        raise ParseError(
            f"columns without a sidecar kind: {', '.join(unknown)}", line=1, source=source
        )
    absent = [name for name in kinds if name not in header]
    if absent:
        raise ParseError(
            f"sidecar attributes missing from header: {', '.join(absent)}",
            line=1,
            source=source,
        )

    raw_rows: list[tuple[int, list[str]]] = []
    for record in reader:
        if not record or all(not cell.strip() for cell in record):
            continue
        if len(record) != len(header):
            raise ParseError(
                f"row has {len(record)} values, header has {len(header)}",
                line=reader.line_num,
                source=source,
            )
        raw_rows.append((reader.line_num, [cell.strip() for cell in record]))

    schema: list[AttributeSpec] = []
    for position, name in enumerate(header):
        kind, values = kinds[name]
        if kind is AttributeKind.CATEGORICAL and not values:
            observed = {row[position] for _, row in raw_rows if row[position] not in MISSING_MARKERS}
            values = tuple(sorted(observed))
            if not values:
                raise ParseError(f"categorical column '{name}' has no values", source=source)
        if kind is AttributeKind.CLASS_LABEL:
            values = ("NO", "YES")
        elif kind is not AttributeKind.CATEGORICAL:
            values = ()
        schema.append(AttributeSpec(name, kind, values))
    frozen_schema = tuple(schema)
    try:
        validate_schema(frozen_schema)
    except ParseError as exc:
        raise ParseError(str(exc), line=1, source=source) from exc

    rows: list[tuple[Cell, ...]] = []
    for line_no, record in raw_rows:
        cells: list[Cell] = []
        for attribute, cell in zip(frozen_schema, record, strict=True):
            if cell in MISSING_MARKERS:
                cells.append(None)
                continue
            try:
                cells.append(attribute.normalize(cell))
            except ValueError as exc:
                raise ParseError(
                    f"invalid value for '{attribute.name}': {exc}",
                    line=line_no,
                    source=source,
                ) from exc
        rows.append(tuple(cells))
    return RawTable(schema=frozen_schema, rows=tuple(rows), relation=source or "csv")
