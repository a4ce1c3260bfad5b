"""``asdbench`` command line: ``run``, ``roc`` and ``inspect``.

Exit codes follow :mod:`asdbench.exceptions`: 0 success, 1 config error,
2 data error, 3 training failure, 4 anything else.
"""

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from rich import box
from rich.console import Console
from rich.table import Table

from asdbench import __version__
from asdbench.config import apply_overrides, load_config
from asdbench.exceptions import AsdBenchError, ConfigError, DataError
from asdbench.helpers.parsers import serialize_arff
from asdbench.models.experiment_model import DataSource
from asdbench.models.log_model import ConsoleLogModel
from asdbench.models.table_model import RawTable
from asdbench.services import ingest_service, report_service
from asdbench.services.experiment_service import execute
from asdbench.services.logging_manager_service import LoggingManager


logger = logging.getLogger("asdbench.cli")

UNEXPECTED_EXIT_CODE = 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="asdbench",
        description="Classifier benchmark for autism-screening questionnaire data.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log at DEBUG level")
    parser.add_argument(
        "--no-log-file", action="store_true", help="log to the console only"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="run an experiment config and write its reports")
    run.add_argument("--config", required=True, type=Path, help="experiment JSON file")
    run.add_argument("--out", type=Path, help="output directory (overrides output_dir)")
    run.add_argument("--seed", type=int, help="first split seed (overrides seed)")
    run.add_argument("--repeat", type=int, help="number of seeds (overrides repeat)")
    run.add_argument(
        "--save-models", action="store_true", help="also write the first seed's fitted models"
    )
    run.set_defaults(handler=cmd_run)

    roc = commands.add_parser("roc", help="render the combined ROC SVG of a saved report")
    roc.add_argument("--report", required=True, type=Path, help="report.json to read")
    roc.add_argument("--out", required=True, type=Path, help="SVG file to write")
    roc.add_argument("--kernels", action="store_true", help="plot the SVM kernel sweep")
    roc.set_defaults(handler=cmd_roc)

    inspect = commands.add_parser("inspect", help="schema and missing-value census of inputs")
    inspect.add_argument("--data", required=True, nargs="+", type=Path, help="ARFF/CSV files")
    inspect.add_argument("--schema", type=Path, help="sidecar schema for CSV inputs")
    inspect.add_argument(
        "--class-attribute", help="class column (default: the last attribute)"
    )
    inspect.add_argument(
        "--export-arff", type=Path, help="write the merged, cleaned table as ARFF"
    )
    inspect.set_defaults(handler=cmd_inspect)
    return parser


def _stdout_console() -> Console:
    return ConsoleLogModel().create_console(stderr=False)


def cmd_run(args: argparse.Namespace, console: Console) -> int:
    config = apply_overrides(
        load_config(args.config),
        seed=args.seed,
        repeat=args.repeat,
        output_dir=args.out,
    )
    outcome = execute(config, keep_models=args.save_models)
    report_service.write_outputs(
        outcome.bundle,
        config.output_dir,
        per_classifier_svg=config.per_classifier_roc_svg,
        models=outcome.models if args.save_models else None,
    )

    seeds = f"{len(config.seeds)} seed(s)"
    if outcome.bundle.classifier_names:
        console.print(
            report_service.rich_table(
                report_service.compare_table(outcome.bundle, "classifiers"),
                title=f"Classifiers ({seeds})",
            )
        )
    if outcome.bundle.kernel_names:
        console.print(
            report_service.rich_table(
                report_service.compare_table(outcome.bundle, "kernels"),
                title=f"SVM kernels ({seeds})",
            )
        )
    console.print(f"Reports written to [bold]{config.output_dir}[/]")
    return 0


def cmd_roc(args: argparse.Namespace, console: Console) -> int:
    bundle = report_service.load_report(args.report)
    section = "kernels" if args.kernels else "classifiers"
    entries = report_service.roc_entries(bundle, section)
    if not entries:
        raise DataError(f"report '{args.report}' holds no {section} results")
    title = "ROC curves of SVM kernels" if args.kernels else "ROC curves of classifiers"
    path = report_service.emit_roc_svg(entries, args.out, title=title)
    console.print(f"ROC plot written to [bold]{path}[/]")
    return 0


def _census_table(table: RawTable, title: str) -> Table:
    census = Table(title=title, box=box.SIMPLE_HEAVY, header_style="bold")
    census.add_column("Attribute")
    census.add_column("Kind")
    census.add_column("Values", justify="right")
    census.add_column("Missing", justify="right")
    missing = table.missing_counts()
    for attribute in table.schema:
        census.add_row(
            attribute.name,
            attribute.kind.value,
            str(len(attribute.values)) if attribute.values else "-",
            str(missing[attribute.name]),
        )
    census.caption = (
        f"{len(table)} rows, {table.rows_with_missing()} with a missing cell"
    )
    return census


def cmd_inspect(args: argparse.Namespace, console: Console) -> int:
    tables: list[RawTable] = []
    for path in args.data:
        try:
            source = DataSource.model_validate({"path": path, "schema": args.schema})
        except ValueError as exc:
            raise ConfigError(f"{path}: {exc}") from exc
        table = ingest_service.read_source(source, class_attribute=args.class_attribute)
        tables.append(table)
        console.print(_census_table(table, f"{path.name} ({table.relation})"))

    merged = ingest_service.merge_tables(tables)
    if len(tables) > 1:
        console.print(_census_table(merged, f"merged ({len(tables)} files)"))

    if args.export_arff is not None:
        cleaned, dropped = ingest_service.drop_missing(merged)
        report_service.write_file(args.export_arff, serialize_arff(cleaned))
        console.print(
            f"Wrote {len(cleaned)} rows ({dropped} dropped) to [bold]{args.export_arff}[/]"
        )
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    manager = LoggingManager()
    manager.setup_logging(
        level="DEBUG" if args.verbose else None,
        log_file=not args.no_log_file,
    )
    try:
        return args.handler(args, _stdout_console())
    except AsdBenchError as exc:
        logger.error("%s failed: %s", args.command, exc)
        return exc.exit_code
    except Exception:
        logger.critical("%s failed unexpectedly", args.command, exc_info=True)
        return UNEXPECTED_EXIT_CODE
    finally:
        manager.shutdown()


if __name__ == "__main__":
    sys.exit(main())
