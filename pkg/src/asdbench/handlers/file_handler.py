import logging
from pathlib import Path

from asdbench.config import get_settings
from asdbench.helpers.formatters import RunJsonFormatter
from asdbench.services.file_manager_service import FileManagerService


# Fields copied from the LogRecord into every JSON line
RECORD_FIELDS = (
    "asctime", "levelname", "name", "message",
    "filename", "funcName", "lineno", "threadName", "process",
)


def create_json_formatter() -> RunJsonFormatter:
    return RunJsonFormatter(
        fmt=list(RECORD_FIELDS),
        datefmt="%Y-%m-%dT%H:%M:%S%z",
        json_ensure_ascii=False,
        max_frames=get_settings().TRACEBACKS_MAX_FRAMES,
    )


class JsonLogFileHandler(logging.FileHandler):
    """Writes one JSON object per line into a fresh file of the dated log tree.

    Opening the handler also rotates old files of the day directory.
    """

    def __init__(self, file_manager: FileManagerService | None = None, **kwargs):
        self.file_manager = file_manager or FileManagerService()
        target = kwargs.pop("filename", None) or self.file_manager.new_log_path()
        super().__init__(
            filename=str(target),
            mode=kwargs.pop("mode", "w"),
            encoding=kwargs.pop("encoding", "utf-8"),
            **kwargs,
        )

    @classmethod
    def create_file_handler(cls, level: int | str = logging.DEBUG, **kwargs) -> "JsonLogFileHandler":
        handler = cls(**kwargs)
        handler.setLevel(level)
        handler.setFormatter(create_json_formatter())
        return handler

    @property
    def path(self) -> Path:
        return Path(self.baseFilename)
