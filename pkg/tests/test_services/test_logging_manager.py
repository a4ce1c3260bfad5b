"""Tests for LoggingManager."""

import json
import logging

from asdbench.handlers import ConsoleHandler, JsonLogFileHandler
from asdbench.services.logging_manager_service import LoggingManager


class TestLoggingManager:
    """Test suite for LoggingManager."""

    def test_singleton_pattern(self):
        """Test LoggingManager is a singleton."""
        assert LoggingManager() is LoggingManager()

    def test_not_configured_initially(self):
        """Test no handlers exist before setup_logging."""
        manager = LoggingManager()

        assert not manager.configured
        assert manager.LOGGER.name == "asdbench"

    def test_setup_logging_adds_handlers(self, tmp_path):
        """Test setup_logging adds console and file handlers."""
        manager = LoggingManager()

        manager.setup_logging(log_dir=tmp_path / "logs")

        assert isinstance(manager.console_handler, ConsoleHandler)
        assert isinstance(manager.file_handler, JsonLogFileHandler)
        assert manager.console_handler in manager.LOGGER.handlers
        assert manager.file_handler in manager.LOGGER.handlers
        assert manager.LOGGER.propagate is False

    def test_setup_logging_prevents_duplicates(self):
        """Test a second call does not add handlers."""
        manager = LoggingManager()

        manager.setup_logging()
        initial_count = len(manager.LOGGER.handlers)
        manager.setup_logging(level="DEBUG")

        assert len(manager.LOGGER.handlers) == initial_count
        assert manager.LOGGER.level == logging.DEBUG

    def test_setup_logging_console_only(self):
        """Test log_file=False skips the file handler."""
        manager = LoggingManager()

        manager.setup_logging(log_file=False)

        assert manager.file_handler is None
        assert manager.console_handler is not None

    def test_setup_logging_sets_level(self):
        """Test setup_logging sets the requested level."""
        manager = LoggingManager()

        manager.setup_logging(level="WARNING", log_file=False)

        assert manager.LOGGER.level == logging.WARNING

    def test_level_defaults_to_settings(self, monkeypatch):
        """Test ASDBENCH_LOG_LEVEL is used when no level is given."""
        from asdbench.config import get_settings

        monkeypatch.setenv("ASDBENCH_LOG_LEVEL", "error")
        get_settings.reset()
        manager = LoggingManager()

        manager.setup_logging(log_file=False)

        assert manager.LOGGER.level == logging.ERROR

    def test_module_logs_reach_file(self, tmp_path):
        """Test child loggers write JSON lines through the file handler."""
        manager = LoggingManager()
        manager.setup_logging(console=False, log_dir=tmp_path / "logs")

        logging.getLogger("asdbench.services.experiment_service").info(
            "Seed %d: %d train / %d test rows", 7, 70, 30
        )
        path = manager.file_handler.path
        manager.shutdown()

        data = json.loads(path.read_text(encoding="utf-8").splitlines()[-1])
        assert data["name"] == "asdbench.services.experiment_service"
        assert data["customargs"] == [7, 70, 30]

    def test_shutdown_detaches_handlers(self):
        """Test shutdown removes handlers and restores propagation."""
        manager = LoggingManager()
        manager.setup_logging(log_file=False)

        manager.shutdown()

        assert not manager.configured
        assert manager.LOGGER.handlers == []
        assert manager.LOGGER.propagate is True
