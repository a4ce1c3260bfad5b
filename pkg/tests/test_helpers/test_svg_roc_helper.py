"""Tests for the ROC SVG renderer."""

import xml.etree.ElementTree as ET

import pytest

from asdbench.helpers.svg_roc_helper import legend_label, render_roc_svg
from asdbench.models.metric_model import RocCurve


SVG_NS = "{http://www.w3.org/2000/svg}"

DIAGONAL = RocCurve(points=((0.0, 0.0), (1.0, 1.0)))
PERFECT = RocCurve(points=((0.0, 0.0), (0.0, 1.0), (1.0, 1.0)))


class TestRenderRocSvg:
    """Test suite for render_roc_svg."""

    def test_document_is_well_formed(self):
        """Test the output parses as XML with an svg root."""
        root = ET.fromstring(render_roc_svg([("NB", PERFECT, 1.0)]))

        assert root.tag == f"{SVG_NS}svg"
        assert root.find(f"{SVG_NS}title").text == "ROC curves"

    def test_one_polyline_per_curve(self):
        """Test each curve gets a polyline and a legend entry in order."""
        svg = render_roc_svg([("NB", PERFECT, 1.0), ("kNN", DIAGONAL, 0.5)], title="Classifiers")
        root = ET.fromstring(svg)

        polylines = root.findall(f"{SVG_NS}polyline")
        legends = [t.text for t in root.findall(f"{SVG_NS}text") if t.get("class") == "legend"]
        assert [p.get("data-name") for p in polylines] == ["NB", "kNN"]
        assert legends == ["NB (AUC = 1.000)", "kNN (AUC = 0.500)"]
        assert polylines[0].get("stroke") != polylines[1].get("stroke")

    def test_perfect_curve_coordinates(self):
        """Test the perfect curve hugs the left and top axes."""
        root = ET.fromstring(render_roc_svg([("DT", PERFECT, 1.0)]))

        points = root.find(f"{SVG_NS}polyline").get("points").split()
        assert points == ["60.00,440.00", "60.00,40.00", "460.00,40.00"]

    def test_names_are_escaped(self):
        """Test markup in names cannot break the document."""
        svg = render_roc_svg([("<SVM&co>", DIAGONAL, 0.5)])

        ET.fromstring(svg)
        assert "&lt;SVM&amp;co&gt;" in svg

    def test_empty_input_rejected(self):
        """Test at least one curve is required."""
        with pytest.raises(ValueError, match="at least one"):
            render_roc_svg([])

    def test_legend_label(self):
        """Test the legend shows AUC with three decimals."""
        assert legend_label("MLP", 0.98765) == "MLP (AUC = 0.988)"
