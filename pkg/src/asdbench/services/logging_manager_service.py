"""Process-wide logging setup.

Library modules only call ``logging.getLogger(__name__)``; the CLI (or an
embedding application) calls :meth:`LoggingManager.setup_logging` once.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path

from asdbench.config import get_settings
from asdbench.config.decorators import singleton
from asdbench.handlers import ConsoleHandler, JsonLogFileHandler
from asdbench.services.file_manager_service import FileManagerService


@singleton
@dataclass
class LoggingManager:
    """Owns the handlers attached to the ``asdbench`` logger.

    Attributes:
        LOGGER: Package logger every module logger propagates to.
        console_handler: Rich console handler, once configured.
        file_handler: JSON file handler, once configured.
    """

    LOGGER: logging.Logger = field(
        init=False, default_factory=lambda: logging.getLogger("asdbench")
    )
    console_handler: ConsoleHandler | None = field(init=False, default=None)
    file_handler: JsonLogFileHandler | None = field(init=False, default=None)

    @property
    def configured(self) -> bool:
        return self.console_handler is not None or self.file_handler is not None

    def setup_logging(
        self,
        *,
        level: str | int | None = None,
        console: bool = True,
        log_file: bool = True,
        log_dir: Path | None = None,
    ) -> None:
        """Attach the console and JSON file handlers.

        Args:
            level: Logger level; ``Settings.LOG_LEVEL`` when ``None``.
            console: Attach the Rich console handler.
            log_file: Attach the JSON file handler.
            log_dir: Log tree root; ``Settings.LOG_DIR`` when ``None``.
        """
        # ⚠️ Warning: Skip if already configured to prevent duplicate handlers
        if self.configured:
            if level is not None:
                self.LOGGER.setLevel(level)
            return

        if console:
            self.console_handler = ConsoleHandler.create_rich_handler()
            self.LOGGER.addHandler(self.console_handler)
        if log_file:
            self.file_handler = JsonLogFileHandler.create_file_handler(
                file_manager=FileManagerService(LOG_DIR=log_dir)
            )
            self.LOGGER.addHandler(self.file_handler)

        self.LOGGER.setLevel(level if level is not None else get_settings().LOG_LEVEL)
        # 🔧 Implementation: Keep records away from any root handlers (pytest, embedding apps)
        self.LOGGER.propagate = False

    def shutdown(self) -> None:
        """Detach and close the handlers; a later :meth:`setup_logging` starts fresh."""
        for handler in (self.console_handler, self.file_handler):
            if handler is not None:
                self.LOGGER.removeHandler(handler)
                handler.close()
        self.console_handler = None
        self.file_handler = None
        self.LOGGER.propagate = True
