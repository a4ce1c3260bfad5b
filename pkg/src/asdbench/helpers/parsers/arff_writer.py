"""ARFF serializer; its output parses back to an equal table."""

from asdbench.models.table_model import AttributeKind, AttributeSpec, RawTable


_NEEDS_QUOTES = set(" ,'\"%{}?\t\\")


def quote(value: str, *, always: bool = False) -> str:
    if value and not always and not (_NEEDS_QUOTES & set(value)):
        return value
    escaped = value.replace("\\", "\\\\").replace("'", "\\'")
    return f"'{escaped}'"


def _declared_type(attribute: AttributeSpec) -> str:
    match attribute.kind:
        case AttributeKind.NUMERIC:
            return "numeric"
        case AttributeKind.BINARY_SCORE:
            return "{0,1}"
        case AttributeKind.BOOLEAN:
            return "{no,yes}"
        case AttributeKind.CLASS_LABEL:
            return "{" + ",".join(attribute.values or ("NO", "YES")) + "}"
        case AttributeKind.CATEGORICAL:
            # quoted sets never read back as 0/1 or yes/no
            return "{" + ",".join(quote(v, always=True) for v in attribute.values) + "}"
    raise AssertionError(attribute.kind)


def serialize_arff(table: RawTable) -> str:
    """Render ``table`` as ARFF text.

    Parse it back with ``class_attribute=table.class_attribute.name`` to get
    an equal table.
    """
    lines = [f"@relation {quote(table.relation)}", ""]
    lines += [
        f"@attribute {quote(attribute.name)} {_declared_type(attribute)}"
        for attribute in table.schema
    ]
    lines += ["", "@data"]
    lines += [
        ",".join("?" if cell is None else quote(cell) for cell in row) for row in table.rows
    ]
    return "\n".join(lines) + "\n"
