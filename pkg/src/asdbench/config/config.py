import json
import os
from dataclasses import asdict, dataclass, field
from pathlib import Path
from zoneinfo import ZoneInfo

from dotenv import load_dotenv

from .decorators import singleton


ENV_PREFIX = "ASDBENCH_"


def load_env_file(project_root: Path) -> bool:
    """Load ``configs/.env`` under ``project_root`` without overriding the environment.

    Returns:
        bool: True if a file was loaded.
    """
    env_path = project_root / "configs" / ".env"
    return env_path.is_file() and load_dotenv(env_path, override=False)


def env(name: str, default: str) -> str:
    return os.environ.get(ENV_PREFIX + name, default)


def env_int(name: str, default: int) -> int:
    return int(env(name, str(default)))


@dataclass
class Settings:
    """Process-wide settings resolved from ``ASDBENCH_*`` variables.

    Experiment parameters live in :class:`~asdbench.models.ExperimentConfig`;
    this class only covers where logs go, how loud they are and how many
    threads independent fits may use.

    Attributes:
        PROJECT_ROOT_: Directory used to resolve ``configs/.env`` and defaults.
        LOG_DIR: Root of the dated JSON log tree.
        LOG_LEVEL: Level of the ``asdbench`` logger.
        MAX_FILES: Log files kept per day directory.
        TZ: Zone of log timestamps and log file names.
        TIMESTAMP_FORMAT: Console time format.
        MAX_WORKERS: Threads for the fits of one seed; 1 runs them in order.
        TRACEBACKS_MAX_FRAMES: Frames kept in compact tracebacks.
    """

    PROJECT_ROOT_: Path = field(default_factory=Path.cwd)
    ENV_LOADED: bool = field(init=False, default=False)

    LOG_DIR: Path = field(init=False)
    LOG_LEVEL: str = field(init=False)
    MAX_FILES: int = field(init=False)
    TZ: ZoneInfo = field(init=False)
    TIMESTAMP_FORMAT: str = field(init=False, default="%H:%M:%S")
    MAX_WORKERS: int = field(init=False)
    TRACEBACKS_MAX_FRAMES: int = field(init=False)

    def __post_init__(self):
        # the file only fills gaps, so it goes first
        self.ENV_LOADED = load_env_file(self.PROJECT_ROOT_)

        self.LOG_DIR = Path(env("LOG_DIR", str(self.PROJECT_ROOT_ / "logs")))
        self.LOG_LEVEL = env("LOG_LEVEL", "INFO").upper()
        self.MAX_FILES = env_int("MAX_FILES", 5)
        self.TZ = ZoneInfo(env("TIMEZONE", "UTC"))
        self.MAX_WORKERS = max(1, env_int("MAX_WORKERS", 1))
        self.TRACEBACKS_MAX_FRAMES = env_int("TRACEBACK_FRAMES", 8)

    def __repr__(self):
        shown = {
            "LOG_DIR": f"'{self.LOG_DIR}'",
            "LOG_LEVEL": self.LOG_LEVEL,
            "TZ": f"'{self.TZ.key}'",
            "MAX_WORKERS": self.MAX_WORKERS,
        }
        return "Settings(" + ", ".join(f"{key}={value}" for key, value in shown.items()) + ")"

    __str__ = __repr__

    @property
    def to_json(self) -> str:
        """Settings as an indented JSON document; paths and the zone as strings."""
        document = {**asdict(self), "TZ": self.TZ.key}
        return json.dumps(document, ensure_ascii=False, indent=2, default=str)


get_settings = singleton(Settings)
