"""Tests for the sidecar-driven CSV reader."""

import pytest

from asdbench.exceptions import ParseError
from asdbench.helpers.parsers import parse_csv, parse_schema_sidecar
from asdbench.models.table_model import AttributeKind


SIDECAR = """\
# screening columns
A1_Score=binary_score
age=numeric
gender=categorical{f,m}
ethnicity=categorical
jundice=boolean
Class/ASD=class_label
"""

CSV_TEXT = """\
A1_Score,age,gender,ethnicity,jundice,Class/ASD
1,26,f,White-European,no,YES
0,,m,Asian,Yes,no
1,35,f,?,no,YES
"""


class TestParseSchemaSidecar:
    """Test suite for parse_schema_sidecar."""

    def test_kinds_in_file_order(self):
        """Test every line maps to its kind and optional values."""
        kinds = parse_schema_sidecar(SIDECAR)

        assert list(kinds) == ["A1_Score", "age", "gender", "ethnicity", "jundice", "Class/ASD"]
        assert kinds["gender"] == (AttributeKind.CATEGORICAL, ("f", "m"))
        assert kinds["ethnicity"] == (AttributeKind.CATEGORICAL, ())
        assert kinds["Class/ASD"][0] is AttributeKind.CLASS_LABEL

    def test_unknown_kind(self):
        """Test an unknown kind names the attribute and line."""
        with pytest.raises(ParseError, match="line 1: unknown kind 'text'"):
            parse_schema_sidecar("note=text\n")

    def test_malformed_line(self):
        """Test a line without '=' is rejected."""
        with pytest.raises(ParseError, match="expected 'name=kind'"):
            parse_schema_sidecar("age numeric\n")

    def test_duplicate_name(self):
        """Test an attribute declared twice is rejected."""
        with pytest.raises(ParseError, match="declared twice"):
            parse_schema_sidecar("age=numeric\nage=numeric\n")


class TestParseCsv:
    """Test suite for parse_csv."""

    def test_rows_and_missing(self):
        """Test empty cells and ? are missing; booleans are canonical."""
        table = parse_csv(CSV_TEXT, parse_schema_sidecar(SIDECAR), source="toy.csv")

        assert len(table) == 3
        assert table.rows[1][1] is None
        assert table.rows[1][4] == "yes"
        assert table.rows[1][5] == "NO"
        assert table.rows[2][3] is None
        assert table.rows_with_missing() == 2
        assert table.relation == "toy.csv"

    def test_observed_categorical_values(self):
        """Test categorical columns without a declared set use sorted observations."""
        table = parse_csv(CSV_TEXT, parse_schema_sidecar(SIDECAR))

        ethnicity = table.schema[table.index_of("ethnicity")]
        assert ethnicity.values == ("Asian", "White-European")

    def test_column_without_kind(self):
        """Test header columns absent from the sidecar are rejected."""
        kinds = parse_schema_sidecar("age=numeric\nClass/ASD=class_label\n")

        with pytest.raises(ParseError, match="columns without a sidecar kind: extra"):
            parse_csv("age,extra,Class/ASD\n1,2,YES\n", kinds)

    def test_row_arity(self):
        """Test a short row reports its line."""
        kinds = parse_schema_sidecar("age=numeric\nClass/ASD=class_label\n")

        with pytest.raises(ParseError, match="line 3"):
            parse_csv("age,Class/ASD\n1,YES\n2\n", kinds)

    def test_invalid_class_value(self):
        """Test a class value other than yes/no is rejected."""
        kinds = parse_schema_sidecar("age=numeric\nClass/ASD=class_label\n")

        with pytest.raises(ParseError, match="invalid value for 'Class/ASD'"):
            parse_csv("age,Class/ASD\n1,maybe\n", kinds)

    def test_non_finite_numeric(self):
        """Test NaN is not a numeric value."""
        kinds = parse_schema_sidecar("age=numeric\nClass/ASD=class_label\n")

        with pytest.raises(ParseError, match="finite"):
            parse_csv("age,Class/ASD\nnan,YES\n", kinds)

    def test_empty_file(self):
        """Test an empty CSV is rejected."""
        with pytest.raises(ParseError, match="empty CSV"):
            parse_csv("", {})
