"""Experiment orchestration: ingest once, then split, fit and score per seed.

The output is a pure function of the config: splits come from the portable
shuffle, every learner is deterministic, and results are gathered in the
fixed config order even when fits run on a thread pool.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from asdbench.config import get_settings
from asdbench.exceptions import ConfigError, DataError, SplitError
from asdbench.models.classifier_model import ClassifierSpec, SvmSpec
from asdbench.models.experiment_model import ExperimentConfig
from asdbench.models.metric_model import MetricReport
from asdbench.models.report_model import ReportBundle, RunMetadata, SampleComparison, SeedRun
from asdbench.models.table_model import Dataset
from asdbench.models.trained_model import TrainedModel
from asdbench.services import ingest_service, metrics_service
from asdbench.services.classifiers import fit


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PreparedData:
    """Encoded dataset plus the cleaning counts the report echoes."""

    dataset: Dataset
    rows_parsed: int
    rows_dropped: int
    excluded: tuple[str, ...]


@dataclass(frozen=True)
class FitJob:
    """One learner to fit on one seed's split.

    Attributes:
        key: Name in predictions, hyperparameters and diagnostics.
        spec: Learner spec.
        section: ``classifiers`` or ``kernels``.
        column: Column name inside that section's table.
    """

    key: str
    spec: ClassifierSpec
    section: str
    column: str


@dataclass(frozen=True)
class FitResult:
    job: FitJob
    model: TrainedModel
    report: MetricReport
    predicted: tuple[int, ...]


@dataclass
class ExperimentOutcome:
    """Report bundle plus the models fitted on the first seed."""

    bundle: ReportBundle
    models: dict[str, TrainedModel] = field(default_factory=dict)


def prepare_data(config: ExperimentConfig) -> PreparedData:
    """Parse, merge, clean and encode every configured input.

    Raises:
        DataError: Unreadable or malformed inputs, or no rows left after
            dropping missing values.
    """
    tables = [
        ingest_service.read_source(source, class_attribute=config.class_attribute)
        for source in config.data
    ]
    merged = ingest_service.merge_tables(tables)
    cleaned, dropped = ingest_service.drop_missing(merged)
    if len(cleaned) == 0:
        raise DataError(f"no rows left after dropping {dropped} rows with missing values")

    excluded = tuple(name for name in config.exclude_attributes if name in cleaned.names)
    dataset = ingest_service.encode(cleaned, exclude=excluded)
    return PreparedData(
        dataset=dataset,
        rows_parsed=sum(len(table) for table in tables),
        rows_dropped=dropped,
        excluded=excluded,
    )


def build_jobs(config: ExperimentConfig) -> list[FitJob]:
    """Classifier fits in config order, then one SVM per sweep kernel.

    Sweep SVMs reuse ``C`` and the solver settings of the first configured
    SVM classifier, or the SVM defaults when there is none.
    """
    jobs = [
        FitJob(spec.display_name, spec, "classifiers", spec.display_name)
        for spec in config.classifiers
    ]
    base = next((spec for spec in config.classifiers if isinstance(spec, SvmSpec)), SvmSpec())
    for kernel in config.kernels:
        spec = base.model_copy(update={"kernel": kernel, "name": kernel.sweep_key})
        jobs.append(FitJob(kernel.sweep_key, spec, "kernels", kernel.label))
    return jobs


def _check_classes(part: Dataset, what: str, seed: int) -> None:
    n_no, n_yes = part.class_counts()
    if n_no == 0 or n_yes == 0:
        present = "NO" if n_yes == 0 else "YES"
        raise SplitError(f"seed {seed}: the {what} split holds only class {present}")


def _fit_one(job: FitJob, raw: tuple[Dataset, Dataset], scaled: tuple[Dataset, Dataset]) -> FitResult:
    train, test = scaled if job.spec.STANDARDIZED else raw
    model = fit(train, job.spec)
    scores = model.scores(test.features)
    predicted = model.labels(test.features)
    report = metrics_service.evaluate(test.labels, predicted, scores)
    return FitResult(
        job=job,
        model=model,
        report=report,
        predicted=tuple(int(label) for label in predicted),
    )


def _fit_all(
    jobs: list[FitJob], raw: tuple[Dataset, Dataset], scaled: tuple[Dataset, Dataset]
) -> list[FitResult]:
    workers = get_settings().MAX_WORKERS
    if workers <= 1 or len(jobs) <= 1:
        return [_fit_one(job, raw, scaled) for job in jobs]
    # 🏗️ Architecture: map() yields in submission order, so reports match a sequential run
    with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="asdbench-fit") as pool:
        return list(pool.map(lambda job: _fit_one(job, raw, scaled), jobs))


def run_seed(
    prepared: PreparedData, config: ExperimentConfig, seed: int
) -> tuple[SeedRun, dict[str, TrainedModel]]:
    """Split with ``seed``, fit every job and score it on the test part.

    Raises:
        SplitError: Either part of the split holds a single class.
        TrainingError: A learner cannot be fitted.
    """
    data = prepared.dataset
    train_idx, test_idx = ingest_service.split_indices(
        data.n_samples, config.train_fraction, seed
    )
    train, test = data.subset(train_idx), data.subset(test_idx)
    _check_classes(train, "training", seed)
    _check_classes(test, "test", seed)
    scaled_train, scaled_test, _ = ingest_service.standardize(train, test)
    logger.info("Seed %d: %d train / %d test rows", seed, train.n_samples, test.n_samples)

    results = _fit_all(build_jobs(config), (train, test), (scaled_train, scaled_test))

    sections: dict[str, dict[str, MetricReport]] = {"classifiers": {}, "kernels": {}}
    predictions: dict[str, tuple[int, ...]] = {}
    hyperparameters: dict[str, dict] = {}
    diagnostics: dict[str, dict] = {}
    models: dict[str, TrainedModel] = {}
    for result in results:
        key = result.job.key
        sections[result.job.section][result.job.column] = result.report
        predictions[key] = result.predicted
        hyperparameters[key] = result.model.spec.model_dump(mode="json")  # type: ignore[attr-defined]
        model_diagnostics = getattr(result.model, "diagnostics", None)
        if model_diagnostics:
            diagnostics[key] = dict(model_diagnostics)
        models[key] = result.model
        logger.info(
            "Seed %d %s: accuracy %.4f, AUC %.4f",
            seed,
            key,
            result.report.accuracy,
            result.report.auc,
        )

    run = SeedRun(
        seed=seed,
        train_size=train.n_samples,
        test_size=test.n_samples,
        test_indices=tuple(int(i) for i in test_idx),
        actual=tuple(int(label) for label in test.labels),
        classifiers=sections["classifiers"],
        kernels=sections["kernels"],
        predictions=predictions,
        hyperparameters=hyperparameters,
        diagnostics=diagnostics,
    )
    return run, models


def comparison_rows(run: SeedRun, n: int) -> SampleComparison:
    """First ``n`` test rows of ``run`` with actual and every predicted label.

    Raises:
        ConfigError: ``n`` is negative or exceeds the test-set size.
    """
    if n < 0 or n > run.test_size:
        raise ConfigError(
            f"sample size {n} is outside the test set of {run.test_size} rows (seed {run.seed})"
        )
    columns = ("actual", *run.predictions)
    rows = tuple(
        (run.actual[i], *(labels[i] for labels in run.predictions.values())) for i in range(n)
    )
    return SampleComparison(columns=columns, rows=rows)


def sample_comparison(bundle: ReportBundle, n: int) -> SampleComparison:
    """Actual-vs-predicted table over the first seed's test split."""
    return comparison_rows(bundle.first_run, n)


def execute(config: ExperimentConfig, *, keep_models: bool = False) -> ExperimentOutcome:
    """Run every seed of ``config``.

    Args:
        config: Validated experiment config.
        keep_models: Also return the models fitted on the first seed.

    Raises:
        DataError: Input, cleaning or split failures.
        TrainingError: A learner cannot be fitted.
        ConfigError: ``sample_size`` larger than the test split.
    """
    prepared = prepare_data(config)
    logger.info(
        "Dataset ready: %d rows used (%d dropped), %d features, seeds %s",
        prepared.dataset.n_samples,
        prepared.rows_dropped,
        prepared.dataset.n_features,
        config.seeds,
    )

    runs: list[SeedRun] = []
    first_models: dict[str, TrainedModel] = {}
    for seed in config.seeds:
        run, models = run_seed(prepared, config, seed)
        runs.append(run)
        if keep_models and not first_models:
            first_models = models

    metadata = RunMetadata(
        config=config.to_document(),
        rows_parsed=prepared.rows_parsed,
        rows_dropped=prepared.rows_dropped,
        rows_used=prepared.dataset.n_samples,
        feature_names=prepared.dataset.feature_names,
        excluded_attributes=prepared.excluded,
        class_balance=prepared.dataset.class_counts(),
    )
    bundle = ReportBundle(
        metadata=metadata,
        runs=tuple(runs),
        sample=comparison_rows(runs[0], config.sample_size),
    )
    if len(runs) > 1:
        for section in ("classifiers", "kernels"):
            for name, stats in bundle.summary(section).items():
                logger.info(
                    "Mean over %d seeds %s: accuracy %.4f (std %.4f), AUC %.4f",
                    len(runs),
                    name,
                    stats["accuracy"].mean,
                    stats["accuracy"].std,
                    stats["auc"].mean,
                )
    return ExperimentOutcome(bundle=bundle, models=first_models)


def run_experiment(config: ExperimentConfig) -> ReportBundle:
    """Parse, merge, clean, encode, then split/standardize/fit/score per seed."""
    return execute(config).bundle
