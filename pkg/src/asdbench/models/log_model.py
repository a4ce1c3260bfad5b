import re
from collections.abc import Mapping, Sequence
from dataclasses import asdict, dataclass, is_dataclass
from datetime import datetime
from functools import partial
from pathlib import PurePath
from typing import Any, ClassVar
from zoneinfo import ZoneInfo

import numpy as np
from pydantic import BaseModel
from rich.console import Console
from rich.theme import Theme


# %s, %d, %.3f, %(name)s, %%
PLACEHOLDER = re.compile(r"%(?:\([^)]+\))?[-+#0 ]*(?:\d+|\*)?(?:\.(?:\d+|\*))?[bcdeEfFgGnosxXr%]")

SHORT_LEVELS = {
    "DEBUG": "DEBG",
    "INFO": "INFO",
    "WARNING": "WARN",
    "ERROR": "ERRO",
    "CRITICAL": "CRIT",
}


@dataclass
class LogModel:
    """Rules shared by the console and file outputs.

    Attributes:
        LOG_LEVELS: Level names from lowest to highest.
    """

    LOG_LEVELS: ClassVar[tuple[str, ...]] = tuple(SHORT_LEVELS)

    @property
    def level_map(self) -> dict[str, str]:
        """Four-letter code per level name."""
        return dict(SHORT_LEVELS)

    def short_level(self, level_name: str) -> str:
        return SHORT_LEVELS.get(level_name, level_name[:4])

    def remove_placeholders(self, text: str) -> str:
        """Cut ``%`` placeholders out of a message and squeeze the spaces.

        Examples:
            >>> LogModel().remove_placeholders("Fitted %s in %.2f s")
            'Fitted in s'
        """
        return " ".join(PLACEHOLDER.sub("", text).split())

    def jsonable(self, value: Any, *, _seen: set[int] | None = None) -> Any:
        """JSON-ready copy of a log argument.

        numpy values become Python scalars and lists, pydantic models are
        dumped in JSON mode, dataclasses prefer their ``to_dict()``. Cycles
        and unknown objects fall back to ``str()``.
        """
        if value is None or isinstance(value, (str, int, float, bool)):
            return value
        if isinstance(value, (np.generic, np.ndarray)):
            return value.tolist()
        if isinstance(value, PurePath):
            return str(value)

        seen = set() if _seen is None else _seen
        if id(value) in seen:
            return str(value)
        seen.add(id(value))
        convert = partial(self.jsonable, _seen=seen)

        if isinstance(value, BaseModel):
            return value.model_dump(mode="json")
        to_dict = getattr(value, "to_dict", None)
        if is_dataclass(value) and not isinstance(value, type):
            document = to_dict() if callable(to_dict) else asdict(value)
            return {key: convert(item) for key, item in document.items()}
        if isinstance(value, Mapping):
            return {str(key): convert(item) for key, item in value.items()}
        if isinstance(value, (Sequence, set, frozenset)) and not isinstance(value, (bytes, bytearray)):
            return [convert(item) for item in value]
        if callable(to_dict):
            return convert(to_dict())
        return str(value)


def _level_styles() -> dict[str, str]:
    pairs = {
        "DEBUG": ("gray35", "bright_black"),
        "INFO": ("bold white", "bright_white"),
        "WARNING": ("bold white on yellow3", "yellow2"),
        "ERROR": ("bright_red", "red3"),
        "CRITICAL": ("bold white on bright_red", "bold white on red3"),
    }
    styles: dict[str, str] = {}
    for level, (badge, message) in pairs.items():
        styles[f"logging.level.{level}"] = badge
        styles[f"logging.message.{level}"] = message
    return styles


@dataclass
class ConsoleLogModel(LogModel):
    """Rich theme and console factory for terminal output.

    ``table.best`` highlights the winning cell of the comparison tables.
    """

    THEME: ClassVar[Theme] = Theme({**_level_styles(), "table.best": "bold green"})

    def style_for(self, kind: str, level_name: str) -> str:
        """Theme style string for ``logging.<kind>.<LEVEL>``."""
        style = self.THEME.styles.get(f"logging.{kind}.{level_name}")
        return "" if style is None else str(style)

    def create_console(self, **kwargs) -> Console:
        """Themed console; stderr unless told otherwise so stdout carries results only."""
        options = {"theme": self.THEME, "stderr": True, "log_path": False, **kwargs}
        return Console(**options)


@dataclass
class FileLogModel(LogModel):
    """Naming of the JSON log files, e.g. ``asdbench_20240115_143025.log``."""

    BASE_NAME: ClassVar[str] = "asdbench"
    FORMAT_DATE_NAME: ClassVar[str] = "%Y%m%d"
    FORMAT_TIME_NAME: ClassVar[str] = "%H%M%S"

    def create_log_file_name(self, date_: datetime | None = None, tz: ZoneInfo | None = None) -> str:
        stamp = date_ or datetime.now(tz)
        pattern = f"{self.FORMAT_DATE_NAME}_{self.FORMAT_TIME_NAME}"
        return f"{self.BASE_NAME}_{stamp.strftime(pattern)}.log"
