"""Self-contained SVG rendering of ROC curves."""

from xml.sax.saxutils import escape

from asdbench.models.metric_model import RocCurve


PLOT_SIZE = 400
MARGIN_LEFT = 60
MARGIN_TOP = 40
MARGIN_BOTTOM = 50
LEGEND_WIDTH = 260
PALETTE = (
    "#1f77b4",
    "#ff7f0e",
    "#2ca02c",
    "#d62728",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#7f7f7f",
    "#bcbd22",
    "#17becf",
)


def _x(fpr: float) -> float:
    return MARGIN_LEFT + fpr * PLOT_SIZE


def _y(tpr: float) -> float:
    return MARGIN_TOP + (1.0 - tpr) * PLOT_SIZE


def legend_label(name: str, auc_value: float) -> str:
    return f"{name} (AUC = {auc_value:.3f})"


def render_roc_svg(
    curves: list[tuple[str, RocCurve, float]], *, title: str = "ROC curves"
) -> str:
    """SVG document with axes, the chance diagonal and one polyline per curve.

    Args:
        curves: ``(name, curve, auc)`` triples, drawn in order.
        title: Heading above the plot.

    Raises:
        ValueError: ``curves`` is empty.
    """
    if not curves:
        raise ValueError("at least one ROC curve is required")

    width = MARGIN_LEFT + PLOT_SIZE + LEGEND_WIDTH
    height = MARGIN_TOP + PLOT_SIZE + MARGIN_BOTTOM
    left, right = _x(0.0), _x(1.0)
    top, bottom = _y(1.0), _y(0.0)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">',
        f"<title>{escape(title)}</title>",
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<text x="{(left + right) / 2:.1f}" y="{MARGIN_TOP / 2 + 4:.1f}" '
        f'text-anchor="middle" font-size="14">{escape(title)}</text>',
        f'<rect class="axes" x="{left:.1f}" y="{top:.1f}" width="{PLOT_SIZE}" '
        f'height="{PLOT_SIZE}" fill="none" stroke="black"/>',
    ]
    for tick in (0.0, 0.2, 0.4, 0.6, 0.8, 1.0):
        parts.append(
            f'<text x="{_x(tick):.1f}" y="{bottom + 16:.1f}" text-anchor="middle">{tick:.1f}</text>'
        )
        parts.append(
            f'<text x="{left - 8:.1f}" y="{_y(tick) + 4:.1f}" text-anchor="end">{tick:.1f}</text>'
        )
    parts += [
        f'<text x="{(left + right) / 2:.1f}" y="{bottom + 38:.1f}" '
        'text-anchor="middle">False positive rate</text>',
        f'<text x="{MARGIN_LEFT - 42}" y="{(top + bottom) / 2:.1f}" text-anchor="middle" '
        f'transform="rotate(-90 {MARGIN_LEFT - 42} {(top + bottom) / 2:.1f})">'
        "True positive rate</text>",
        f'<line class="chance" x1="{left:.1f}" y1="{bottom:.1f}" x2="{right:.1f}" '
        f'y2="{top:.1f}" stroke="#999999" stroke-dasharray="4 4"/>',
    ]

    for index, (name, curve, auc_value) in enumerate(curves):
        color = PALETTE[index % len(PALETTE)]
        points = " ".join(f"{_x(fpr):.2f},{_y(tpr):.2f}" for fpr, tpr in curve.points)
        parts.append(
            f'<polyline class="roc" data-name="{escape(name)}" points="{points}" '
            f'fill="none" stroke="{color}" stroke-width="2"/>'
        )
        legend_y = top + 14 + index * 20
        legend_x = right + 20
        parts.append(
            f'<line x1="{legend_x}" y1="{legend_y - 4:.1f}" x2="{legend_x + 20}" '
            f'y2="{legend_y - 4:.1f}" stroke="{color}" stroke-width="2"/>'
        )
        parts.append(
            f'<text class="legend" x="{legend_x + 26}" y="{legend_y:.1f}">'
            f"{escape(legend_label(name, auc_value))}</text>"
        )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
