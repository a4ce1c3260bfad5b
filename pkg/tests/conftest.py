"""Shared pytest fixtures for all tests.

Provides isolated settings, log records, screening-style ARFF fixtures
and small numeric datasets.
"""

import json
import logging
import sys
from collections.abc import Callable
from datetime import datetime
from pathlib import Path
from typing import Any
from zoneinfo import ZoneInfo

import numpy as np
import pytest

from asdbench.config import get_settings
from asdbench.models.table_model import Dataset
from asdbench.services.logging_manager_service import LoggingManager


# ============================================================================
# Configuration Fixtures
# ============================================================================


@pytest.fixture(autouse=True)
def isolated_settings(tmp_path: Path, monkeypatch):
    """Point settings at a temporary log dir and reset process-wide singletons.

    Yields:
        Settings: Fresh settings built for this test.
    """
    monkeypatch.setenv("ASDBENCH_LOG_DIR", str(tmp_path / "logs"))
    monkeypatch.setenv("ASDBENCH_TIMEZONE", "UTC")
    monkeypatch.delenv("ASDBENCH_MAX_WORKERS", raising=False)
    monkeypatch.delenv("ASDBENCH_LOG_LEVEL", raising=False)
    get_settings.reset()
    yield get_settings()
    LoggingManager().shutdown()
    LoggingManager.reset()
    get_settings.reset()


@pytest.fixture
def mock_timezone():
    """Provide UTC timezone for consistent testing.

    Returns:
        ZoneInfo: UTC timezone.
    """
    return ZoneInfo("UTC")


@pytest.fixture
def sample_datetime(mock_timezone) -> datetime:
    """Fixed datetime (2024-01-15 14:30:25 UTC)."""
    return datetime(2024, 1, 15, 14, 30, 25, tzinfo=mock_timezone)


# ============================================================================
# Logging Fixtures
# ============================================================================


@pytest.fixture
def sample_log_record() -> logging.LogRecord:
    """INFO record without arguments."""
    return logging.LogRecord(
        name="asdbench.test",
        level=logging.INFO,
        pathname="/test/path.py",
        lineno=42,
        msg="Dataset ready",
        args=(),
        exc_info=None,
    )


@pytest.fixture
def sample_log_record_with_args() -> logging.LogRecord:
    """INFO record with ``%``-style arguments."""
    return logging.LogRecord(
        name="asdbench.test",
        level=logging.INFO,
        pathname="/test/path.py",
        lineno=42,
        msg="Seed %d %s: accuracy %.4f",
        args=(42, "kNN", 0.9375),
        exc_info=None,
    )


@pytest.fixture
def sample_log_record_with_exception() -> logging.LogRecord:
    """ERROR record carrying exception info."""
    try:
        raise ValueError("Test error")
    except ValueError:
        exc_info = sys.exc_info()

    return logging.LogRecord(
        name="asdbench.test",
        level=logging.ERROR,
        pathname="/test/path.py",
        lineno=42,
        msg="An error occurred",
        args=(),
        exc_info=exc_info,
    )


# ============================================================================
# Data Fixtures
# ============================================================================

# Rows 3 and 4 each carry one missing cell.
TOY_ARFF = """\
% toy screening sample
@relation 'toy-screening'

@attribute A1_Score {0,1}
@attribute A2_Score {0,1}
@attribute age numeric
@attribute gender {f,m}
@attribute ethnicity {'White-European','Middle Eastern ',Asian}
@attribute jundice {no,yes}
@attribute age_desc {'18 and more'}
@attribute result numeric
@attribute Class/ASD {NO,YES}

@data
1,1,26,f,'White-European',no,'18 and more',2,YES
0,1,24,m,Asian,no,'18 and more',1,NO
1,0,?,m,'Middle Eastern ',yes,'18 and more',1,NO
1,1,35,f,?,no,'18 and more',2,YES
0,0,40,f,Asian,yes,'18 and more',0,NO
"""

TOY_MISSING_ROWS = 2


@pytest.fixture
def toy_arff_text() -> str:
    """Five-row screening-style ARFF with two incomplete rows."""
    return TOY_ARFF


@pytest.fixture
def toy_arff_file(tmp_path: Path) -> Path:
    path = tmp_path / "toy.arff"
    path.write_text(TOY_ARFF, encoding="utf-8")
    return path


def screening_arff(n_rows: int, seed: int, *, relation: str = "screening", missing_every: int = 0) -> str:
    """Synthetic questionnaire file with the real files' column layout.

    The class is ``YES`` exactly when at least six of the ten item scores
    are 1; ``result`` holds that sum. Every ``missing_every``-th row has a
    missing age.
    """
    rng = np.random.default_rng(seed)
    ethnicities = ("Asian", "Latino", "White-European", "Middle Eastern ")
    lines = [f"@relation {relation}", ""]
    lines += [f"@attribute A{i}_Score {{0,1}}" for i in range(1, 11)]
    lines += [
        "@attribute age numeric",
        "@attribute gender {f,m}",
        "@attribute ethnicity {" + ",".join(f"'{e}'" for e in ethnicities) + "}",
        "@attribute jundice {no,yes}",
        "@attribute austim {no,yes}",
        "@attribute age_desc {'18 and more'}",
        "@attribute result numeric",
        "@attribute Class/ASD {NO,YES}",
        "",
        "@data",
    ]
    for row in range(n_rows):
        scores = rng.integers(0, 2, size=10)
        total = int(scores.sum())
        age = "?" if missing_every and row % missing_every == missing_every - 1 else str(
            int(rng.integers(18, 65))
        )
        cells = [
            *(str(int(s)) for s in scores),
            age,
            str(rng.choice(["f", "m"])),
            f"'{ethnicities[int(rng.integers(0, len(ethnicities)))]}'",
            str(rng.choice(["no", "yes"])),
            str(rng.choice(["no", "yes"])),
            "'18 and more'",
            str(total),
            "YES" if total >= 6 else "NO",
        ]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


@pytest.fixture
def screening_files(tmp_path: Path) -> list[Path]:
    """Three synthetic files (child, adolescent, adult stand-ins)."""
    paths = []
    for index, (name, rows) in enumerate((("child", 40), ("adolescent", 30), ("adult", 50))):
        path = tmp_path / "data" / f"{name}.arff"
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(
            screening_arff(rows, seed=100 + index, relation=name, missing_every=10),
            encoding="utf-8",
        )
        paths.append(path)
    return paths


@pytest.fixture
def write_config(tmp_path: Path) -> Callable[..., Path]:
    """Write a config document next to the data and return its path."""

    def _write(document: dict[str, Any], name: str = "experiment.json") -> Path:
        path = tmp_path / name
        path.write_text(json.dumps(document, indent=2), encoding="utf-8")
        return path

    return _write


@pytest.fixture
def fast_config_document(screening_files: list[Path], tmp_path: Path) -> dict[str, Any]:
    """All seven learners with light settings plus the default kernel sweep."""
    return {
        "data": [str(path.relative_to(tmp_path)) for path in screening_files],
        "seed": 7,
        "output_dir": str(tmp_path / "results"),
        "sample_size": 5,
        "classifiers": [
            {"kind": "naive_bayes"},
            {"kind": "knn", "k": 3},
            {"kind": "logistic", "max_iters": 300},
            {"kind": "gradient_boost", "rounds": 20},
            {"kind": "svm"},
            {"kind": "decision_tree"},
            {"kind": "mlp", "epochs": 50},
        ],
    }


# ============================================================================
# Numeric Dataset Fixtures
# ============================================================================


def make_dataset(features, labels, names: tuple[str, ...] | None = None) -> Dataset:
    features = np.asarray(features, dtype=np.float64)
    if names is None:
        names = tuple(f"x{i}" for i in range(features.shape[1]))
    return Dataset(features=features, labels=np.asarray(labels), feature_names=names)


@pytest.fixture
def xor_dataset() -> Dataset:
    """The four XOR corners."""
    return make_dataset([[0, 0], [0, 1], [1, 0], [1, 1]], [0, 1, 1, 0])


@pytest.fixture
def separable_dataset() -> Dataset:
    """Two well-separated Gaussian blobs, 40 rows."""
    rng = np.random.default_rng(3)
    negatives = rng.normal(loc=-2.0, scale=0.5, size=(20, 2))
    positives = rng.normal(loc=2.0, scale=0.5, size=(20, 2))
    return make_dataset(np.vstack([negatives, positives]), [0] * 20 + [1] * 20)


@pytest.fixture
def random_dataset() -> Callable[..., Dataset]:
    """Factory for random ``n x d`` datasets holding both classes."""

    def _make(n: int = 30, d: int = 4, seed: int = 0) -> Dataset:
        rng = np.random.default_rng(seed)
        X = rng.normal(size=(n, d))
        y = (X[:, 0] + 0.5 * rng.normal(size=n) > 0).astype(int)
        y[0], y[1] = 0, 1
        return make_dataset(X, y)

    return _make


@pytest.fixture
def dataset_of() -> Callable[..., Dataset]:
    """Build a :class:`Dataset` from nested lists."""
    return make_dataset


@pytest.fixture
def screening_text() -> Callable[..., str]:
    """Synthetic screening ARFF text generator (see :func:`screening_arff`)."""
    return screening_arff
