import contextlib
import os
import tempfile
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path

from asdbench.config import get_settings
from asdbench.models.log_model import FileLogModel


@dataclass
class FileManagerService:
    """Files and directories owned by asdbench.

    Handles the dated log directory with its retention limit, and the
    experiment output directory with atomic text writes.

    Attributes:
        LOG_DIR: Root of the log tree; defaults to ``Settings.LOG_DIR``.
        MAX_FILES: Log files kept per day directory.
        FILE_LOG: Log file naming.
        BACKUP_LOG_DIR: Day directory the current run logs into.
        FORMAT_LOG_DIR: Date format for the day directory.
    """

    LOG_DIR: Path | None = None
    MAX_FILES: int | None = None
    FILE_LOG: FileLogModel = field(init=False, default_factory=FileLogModel)

    BACKUP_LOG_DIR: Path = field(init=False)
    FORMAT_LOG_DIR: str = field(init=False, default="%Y-%m/%d")

    def __post_init__(self):
        settings = get_settings()
        self._tz = settings.TZ
        if self.LOG_DIR is None:
            self.LOG_DIR = settings.LOG_DIR
        if self.MAX_FILES is None:
            self.MAX_FILES = settings.MAX_FILES
        self.BACKUP_LOG_DIR = self.LOG_DIR / datetime.now(self._tz).strftime(
            self.FORMAT_LOG_DIR
        )

    def setup_log_dirs(self) -> Path:
        """Create the day directory and return it."""
        self.BACKUP_LOG_DIR.mkdir(parents=True, exist_ok=True)
        return self.BACKUP_LOG_DIR

    def new_log_path(self) -> Path:
        """Fresh log file path in the day directory, after enforcing retention."""
        self.setup_log_dirs()
        self.cleanup_old_files()
        return self.BACKUP_LOG_DIR / self.FILE_LOG.create_log_file_name(tz=self._tz)

    def cleanup_old_files(self) -> None:
        """Remove the oldest logs so that one more file fits under ``MAX_FILES``."""
        if not self.BACKUP_LOG_DIR.exists():
            return
        files = sorted(self.BACKUP_LOG_DIR.glob("*.log"), key=lambda f: f.stat().st_mtime)
        limit = max(1, self.MAX_FILES or 1)
        if len(files) >= limit:
            self._delete_files(files, len(files) - limit + 1)

    def _delete_files(self, files: list[Path], qtd_to_remove: int) -> None:
        for file_path in files[:qtd_to_remove]:
            with contextlib.suppress(OSError):
                file_path.unlink()

    @staticmethod
    def prepare_output_dir(path: Path) -> Path:
        """Create the experiment output directory (and parents)."""
        path.mkdir(parents=True, exist_ok=True)
        return path

    @staticmethod
    def write_text(path: Path, content: str) -> Path:
        """Write ``content`` through a temporary file and an atomic rename.

        A crash never leaves a half-written report behind.
        """
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp_name = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent)
        try:
            with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
                handle.write(content)
            os.replace(tmp_name, path)
        except BaseException:
            with contextlib.suppress(OSError):
                os.unlink(tmp_name)
            raise
        return path
