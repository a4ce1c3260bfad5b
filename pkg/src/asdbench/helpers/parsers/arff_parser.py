"""ARFF reader for the subset used by the screening files.

Supported: ``@relation``, ``@attribute name {v1,...}``, ``@attribute name
numeric|real|integer``, ``@data``, comma-separated rows, ``?`` for missing,
``%`` comment lines, single- or double-quoted tokens. Keywords are
case-insensitive.
"""

import re
from dataclasses import dataclass

from asdbench.exceptions import ParseError
from asdbench.models.table_model import (
    NO_VALUES,
    YES_VALUES,
    AttributeKind,
    AttributeSpec,
    Cell,
    RawTable,
    validate_schema,
)


MISSING_MARKER = "?"
NUMERIC_TYPES = frozenset({"numeric", "real", "integer"})

_ATTRIBUTE_RE = re.compile(
    r"""^@attribute\s+
        (?P<name>'(?:[^'\\]|\\.)*'|"(?:[^"\\]|\\.)*"|[^\s{]+)
        \s*(?P<type>.+?)\s*$""",
    re.IGNORECASE | re.VERBOSE,
)
_RELATION_RE = re.compile(r"^@relation\s+(?P<name>.+?)\s*$", re.IGNORECASE)


@dataclass(frozen=True)
class Token:
    text: str
    quoted: bool

    @property
    def is_missing(self) -> bool:
        return not self.quoted and self.text == MISSING_MARKER


def unquote(text: str) -> str:
    text = text.strip()
    if len(text) >= 2 and text[0] == text[-1] and text[0] in "'\"":
        return re.sub(r"\\(.)", r"\1", text[1:-1])
    return text


def split_values(line: str, *, line_no: int | None = None) -> list[Token]:
    """Split a comma-separated ARFF line, honouring quotes and ``\\`` escapes."""
    tokens: list[Token] = []
    buffer: list[str] = []
    quote: str | None = None
    quoted = False
    chars = iter(line)
    for char in chars:
        if quote is not None:
            if char == "\\":
                buffer.append(next(chars, ""))
            elif char == quote:
                quote = None
            else:
                buffer.append(char)
        elif char in "'\"" and not "".join(buffer).strip():
            buffer.clear()
            quote = char
            quoted = True
        elif char == ",":
            tokens.append(Token("".join(buffer).strip(), quoted))
            buffer.clear()
            quoted = False
        else:
            buffer.append(char)
    if quote is not None:
        raise ParseError("unterminated quoted value", line=line_no)
    tokens.append(Token("".join(buffer).strip(), quoted))
    return tokens


def infer_kind(
    name: str, values: tuple[str, ...], *, is_class: bool, quoted: bool = False
) -> AttributeKind:
    """Map a nominal declaration to an attribute kind.

    A value set written entirely in quotes is always categorical, so
    ``{'0','1'}`` keeps its labels instead of becoming a 0/1 score.
    """
    folded = {value.casefold() for value in values}
    if is_class:
        if not folded or not folded <= YES_VALUES | NO_VALUES:
            raise ParseError(f"class attribute '{name}' must be declared {{NO,YES}}")
        return AttributeKind.CLASS_LABEL
    if quoted:
        return AttributeKind.CATEGORICAL
    if folded == {"0", "1"}:
        return AttributeKind.BINARY_SCORE
    if folded and folded <= YES_VALUES | NO_VALUES:
        return AttributeKind.BOOLEAN
    return AttributeKind.CATEGORICAL


@dataclass
class _Declaration:
    name: str
    numeric: bool
    values: tuple[str, ...]
    line_no: int
    quoted: bool = False


def _parse_declaration(line: str, line_no: int, source: str) -> _Declaration:
    match = _ATTRIBUTE_RE.match(line)
    if match is None:
        raise ParseError(
            f"malformed attribute declaration: {line!r}", line=line_no, source=source
        )
    name = unquote(match["name"])
    type_text = match["type"]
    if type_text.startswith("{"):
        if not type_text.endswith("}"):
            raise ParseError(
                f"unterminated value set for '{name}'", line=line_no, source=source
            )
        tokens = split_values(type_text[1:-1], line_no=line_no)
        values = tuple(dict.fromkeys(t.text for t in tokens if t.text))
        if not values:
            raise ParseError(f"empty value set for '{name}'", line=line_no, source=source)
        quoted = all(t.quoted for t in tokens if t.text)
        return _Declaration(name, False, values, line_no, quoted)
    if type_text.casefold() in NUMERIC_TYPES:
        return _Declaration(name, True, (), line_no)
    raise ParseError(
        f"unsupported attribute type '{type_text}' for '{name}'",
        line=line_no,
        source=source,
    )


def _build_schema(
    declarations: list[_Declaration], class_attribute: str | None
) -> tuple[AttributeSpec, ...]:
    if not declarations:
        raise ParseError("no @attribute declarations before @data")
    class_name = class_attribute or declarations[-1].name
    if class_name not in {d.name for d in declarations}:
        raise ParseError(f"class attribute '{class_name}' is not declared")
    schema: list[AttributeSpec] = []
    for declaration in declarations:
        is_class = declaration.name == class_name
        if declaration.numeric:
            if is_class:
                raise ParseError(
                    f"class attribute '{class_name}' must be nominal"
                    f" (declared on line {declaration.line_no})"
                )
            schema.append(AttributeSpec(declaration.name, AttributeKind.NUMERIC))
            continue
        kind = infer_kind(
            declaration.name, declaration.values, is_class=is_class, quoted=declaration.quoted
        )
        values = declaration.values if kind is AttributeKind.CATEGORICAL else ()
        if kind is AttributeKind.CLASS_LABEL:
            values = tuple(dict.fromkeys(v.upper() for v in declaration.values))
        schema.append(AttributeSpec(declaration.name, kind, values))
    result = tuple(schema)
    validate_schema(result)
    return result


def parse_arff(
    text: str, *, class_attribute: str | None = None, source: str = ""
) -> RawTable:
    """Parse ARFF text into a :class:`RawTable`.

    Args:
        text: Whole file content.
        class_attribute: Name of the class column; the last declared
            attribute when ``None``.
        source: File name used in error messages.

    Raises:
        ParseError: Malformed header, row arity mismatch, or a cell that is
            invalid for its attribute; the message carries the line number.
    """
    relation = "table"
    declarations: list[_Declaration] = []
    schema: tuple[AttributeSpec, ...] | None = None
    rows: list[tuple[Cell, ...]] = []

    for line_no, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith("%"):
            continue

        if schema is None:
            keyword = line.split(None, 1)[0].casefold()
            if keyword == "@relation":
                match = _RELATION_RE.match(line)
                if match is None:
                    raise ParseError("malformed @relation", line=line_no, source=source)
                relation = unquote(match["name"])
            elif keyword == "@attribute":
                declarations.append(_parse_declaration(line, line_no, source))
            elif keyword == "@data":
                try:
                    schema = _build_schema(declarations, class_attribute)
                except ParseError as exc:
                    raise ParseError(str(exc), line=line_no, source=source) from exc
            else:
                raise ParseError(
                    f"unexpected header line: {line!r}", line=line_no, source=source
                )
            continue

        rows.append(_parse_row(line, line_no, schema, source))

    if schema is None:
        raise ParseError("missing @data section", source=source)
    return RawTable(schema=schema, rows=tuple(rows), relation=relation)


def _parse_row(
    line: str, line_no: int, schema: tuple[AttributeSpec, ...], source: str
) -> tuple[Cell, ...]:
    tokens = split_values(line, line_no=line_no)
    if len(tokens) != len(schema):
        raise ParseError(
            f"row has {len(tokens)} values, {len(schema)} attributes declared",
            line=line_no,
            source=source,
        )
    cells: list[Cell] = []
    for attribute, token in zip(schema, tokens, strict=True):
        if token.is_missing:
            cells.append(None)
            continue
        try:
            cells.append(attribute.normalize(token.text))
        except ValueError as exc:
            raise ParseError(
                f"invalid value for '{attribute.name}': {exc}", line=line_no, source=source
            ) from exc
    return tuple(cells)
