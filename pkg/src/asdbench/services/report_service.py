"""Report rendering and output files.

Tables show means over seeds rounded to three decimals; ``report.json``
keeps full precision. Every file is written through
:meth:`FileManagerService.write_text`.
"""

import csv
import io
import json
import logging
import re
from collections.abc import Mapping
from pathlib import Path
from typing import Any

from rich import box
from rich.table import Table

from asdbench.exceptions import ModelFormatError, OutputError
from asdbench.helpers.svg_roc_helper import render_roc_svg
from asdbench.models.metric_model import TABLE_ROWS, RocCurve
from asdbench.models.report_model import ReportBundle, SampleComparison
from asdbench.models.trained_model import TrainedModel
from asdbench.services.classifiers import dump_model
from asdbench.services.file_manager_service import FileManagerService
from asdbench.services.metrics_service import roc_to_csv


logger = logging.getLogger(__name__)

REPORT_FILE = "report.json"
CLASSIFIER_TABLE_FILE = "table1.csv"
KERNEL_TABLE_FILE = "table2.csv"
ROC_ALL_FILE = "roc_all.svg"
ROC_KERNELS_FILE = "roc_kernels.svg"
SAMPLE_FILE = "sample_comparison.csv"
MODELS_DIR = "models"

_UNSAFE_CHARS = re.compile(r"[^A-Za-z0-9._-]+")

Section = str
MeanTable = Mapping[str, Mapping[str, float]]


def file_stem(name: str) -> str:
    """File-name-safe form of a learner or kernel name."""
    return _UNSAFE_CHARS.sub("_", name).strip("_") or "model"


def report_json(bundle: ReportBundle) -> str:
    """Canonical ``report.json`` text; identical bundles give identical bytes."""
    return json.dumps(bundle.to_dict(), indent=2, sort_keys=True, allow_nan=False) + "\n"


def load_report(path: str | Path) -> ReportBundle:
    """Read a ``report.json`` written by :func:`write_outputs`.

    Raises:
        ModelFormatError: Unreadable file, invalid JSON or wrong version.
    """
    report_path = Path(path)
    try:
        document = json.loads(report_path.read_text(encoding="utf-8"))
        return ReportBundle.from_dict(document)
    except OSError as exc:
        raise ModelFormatError(f"cannot read report '{report_path}': {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise ModelFormatError(f"{report_path}: invalid JSON ({exc.msg})") from exc
    except (KeyError, TypeError, ValueError) as exc:
        raise ModelFormatError(f"{report_path}: malformed report ({exc})") from exc


def compare_table(bundle: ReportBundle, section: Section = "classifiers") -> MeanTable:
    """Comparison table: one column per learner (or kernel), eight metric rows."""
    return bundle.mean_table(section)


def table_csv(table: MeanTable) -> str:
    """Metric rows by column, values with three decimals."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    columns = list(table)
    writer.writerow(["metric", *columns])
    for row in TABLE_ROWS:
        writer.writerow([row, *(f"{table[column][row]:.3f}" for column in columns)])
    return buffer.getvalue()


def table_text(table: MeanTable) -> str:
    """Aligned plain-text rendering of :func:`table_csv`."""
    columns = list(table)
    label_width = max(len(row) for row in TABLE_ROWS)
    widths = [max(len(column), 5) for column in columns]
    header = "  ".join(
        ["".ljust(label_width), *(c.rjust(w) for c, w in zip(columns, widths, strict=True))]
    )
    lines = [header.rstrip()]
    for row in TABLE_ROWS:
        cells = [f"{table[c][row]:.3f}".rjust(w) for c, w in zip(columns, widths, strict=True)]
        lines.append("  ".join([row.ljust(label_width), *cells]))
    return "\n".join(lines) + "\n"


def rich_table(table: MeanTable, *, title: str) -> Table:
    """Console table; the best value of each row is highlighted."""
    columns = list(table)
    rendered = Table(title=title, box=box.SIMPLE_HEAVY, header_style="bold")
    rendered.add_column("Metric", style="bold")
    for column in columns:
        rendered.add_column(column, justify="right")
    for row in TABLE_ROWS:
        values = [table[column][row] for column in columns]
        best = max(values) if values else None
        rendered.add_row(
            row,
            *(
                f"[table.best]{value:.3f}[/]" if value == best else f"{value:.3f}"
                for value in values
            ),
        )
    return rendered


def sample_csv(sample: SampleComparison) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(sample.columns)
    writer.writerows(sample.rows)
    return buffer.getvalue()


def roc_entries(bundle: ReportBundle, section: Section) -> list[tuple[str, RocCurve, float]]:
    """``(name, curve, auc)`` per learner of the first seed, in report order."""
    reports = getattr(bundle.first_run, section)
    return [(name, report.roc, report.auc) for name, report in reports.items()]


def emit_roc_svg(
    curves: list[tuple[str, RocCurve, float]], path: str | Path, *, title: str = "ROC curves"
) -> Path:
    """Render ``curves`` into a standalone SVG at ``path``.

    Raises:
        ValueError: ``curves`` is empty.
        OutputError: ``path`` cannot be written.
    """
    document = render_roc_svg(curves, title=title)
    return write_file(Path(path), document)


def write_file(path: Path, content: str) -> Path:
    """Atomic UTF-8 write.

    Raises:
        OutputError: The file or its directory cannot be written.
    """
    try:
        return FileManagerService.write_text(path, content)
    except OSError as exc:
        raise OutputError(f"cannot write '{path}': {exc.strerror or exc}") from exc


def write_outputs(
    bundle: ReportBundle,
    out_dir: str | Path,
    *,
    per_classifier_svg: bool = False,
    models: Mapping[str, TrainedModel] | None = None,
) -> list[Path]:
    """Write every report file into ``out_dir``.

    Files: ``report.json``, ``table1.csv`` and ``table2.csv`` with aligned
    ``.txt`` twins, ``roc_all.svg``,
    ``roc_kernels.svg``, ``roc_<name>.csv`` per learner and kernel,
    optional ``roc_<name>.svg``, ``sample_comparison.csv`` and optional
    ``models/<name>.json``. Empty sections skip their table and SVG.

    Raises:
        OutputError: The directory or a file cannot be written.
    """
    target = Path(out_dir)
    try:
        FileManagerService.prepare_output_dir(target)
    except OSError as exc:
        raise OutputError(f"cannot create output directory '{target}': {exc.strerror}") from exc

    written = [write_file(target / REPORT_FILE, report_json(bundle))]
    sections: tuple[tuple[Section, str, str, str], ...] = (
        ("classifiers", CLASSIFIER_TABLE_FILE, ROC_ALL_FILE, "ROC curves of classifiers"),
        ("kernels", KERNEL_TABLE_FILE, ROC_KERNELS_FILE, "ROC curves of SVM kernels"),
    )
    for section, table_file, svg_file, title in sections:
        entries = roc_entries(bundle, section)
        if not entries:
            continue
        table = compare_table(bundle, section)
        written.append(write_file(target / table_file, table_csv(table)))
        written.append(write_file((target / table_file).with_suffix(".txt"), table_text(table)))
        written.append(emit_roc_svg(entries, target / svg_file, title=title))
        for name, curve, auc_value in entries:
            stem = file_stem(name)
            written.append(write_file(target / f"roc_{stem}.csv", roc_to_csv(curve)))
            if per_classifier_svg:
                written.append(
                    emit_roc_svg([(name, curve, auc_value)], target / f"roc_{stem}.svg", title=name)
                )

    written.append(write_file(target / SAMPLE_FILE, sample_csv(bundle.sample)))
    for name, model in (models or {}).items():
        document: dict[str, Any] = dump_model(model)
        written.append(
            write_file(target / MODELS_DIR / f"{file_stem(name)}.json", json.dumps(document, indent=2) + "\n")
        )

    logger.info("Wrote %d files to %s", len(written), target)
    return written
