"""Exception hierarchy shared by every asdbench layer.

Each class carries the CLI exit code it maps to, so the command line only
needs to catch :class:`AsdBenchError`.
"""


class AsdBenchError(Exception):
    """Base class for all errors raised by asdbench."""

    exit_code: int = 4


class ConfigError(AsdBenchError, ValueError):
    """Experiment config is missing, malformed, or out of range."""

    exit_code = 1


class DataError(AsdBenchError):
    """Input data cannot be parsed, merged, encoded, or split."""

    exit_code = 2


class ParseError(DataError, ValueError):
    """Malformed ARFF/CSV content.

    Attributes:
        line: 1-based line number of the offending line, when known.
    """

    def __init__(self, message: str, *, line: int | None = None, source: str = "") -> None:
        self.line = line
        self.source = source
        where = f"{source}:" if source else ""
        prefix = f"{where}line {line}: " if line is not None else where
        super().__init__(f"{prefix}{message}")


class SchemaMismatchError(DataError):
    """Tables being merged disagree on attribute names or kinds."""


class EncodingError(DataError):
    """A table cannot be turned into a numeric dataset."""


class SplitError(DataError):
    """Train/test split parameters or outcome are invalid."""


class TrainingError(AsdBenchError):
    """A learner cannot be fitted or applied."""

    exit_code = 3


class KernelError(TrainingError):
    """Kernel evaluation on incompatible or non-finite inputs."""


class ModelFormatError(DataError, ValueError):
    """A saved model or report document has the wrong version or shape."""


class OutputError(AsdBenchError):
    """An output file or directory cannot be written."""
