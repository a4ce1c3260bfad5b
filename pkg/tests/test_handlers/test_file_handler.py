"""Tests for JsonLogFileHandler."""

import json
import logging
from pathlib import Path

from asdbench.handlers.file_handler import JsonLogFileHandler, create_json_formatter
from asdbench.helpers.formatters import RunJsonFormatter
from asdbench.services.file_manager_service import FileManagerService


class TestJsonLogFileHandler:
    """Test suite for JsonLogFileHandler."""

    def test_create_file_handler(self, tmp_path: Path):
        """Test create_file_handler attaches the JSON formatter."""
        handler = JsonLogFileHandler.create_file_handler(
            file_manager=FileManagerService(LOG_DIR=tmp_path / "logs")
        )
        try:
            assert isinstance(handler, JsonLogFileHandler)
            assert handler.level == logging.DEBUG
            assert isinstance(handler.formatter, RunJsonFormatter)
        finally:
            handler.close()

    def test_handler_file_lives_in_day_directory(self, tmp_path: Path):
        """Test the log file is created under the dated directory."""
        manager = FileManagerService(LOG_DIR=tmp_path / "logs")
        handler = JsonLogFileHandler.create_file_handler(file_manager=manager)
        handler.close()

        assert handler.path.parent == manager.BACKUP_LOG_DIR
        assert handler.path.name.startswith("asdbench_")
        assert handler.path.suffix == ".log"

    def test_handler_uses_settings_log_dir(self, isolated_settings):
        """Test the default file manager follows ASDBENCH_LOG_DIR."""
        handler = JsonLogFileHandler.create_file_handler()
        handler.close()

        assert isolated_settings.LOG_DIR in handler.path.parents

    def test_handler_writes_json_lines(self, tmp_path: Path, sample_log_record_with_args):
        """Test every record becomes one JSON object per line."""
        handler = JsonLogFileHandler.create_file_handler(
            file_manager=FileManagerService(LOG_DIR=tmp_path / "logs")
        )
        handler.emit(sample_log_record_with_args)
        handler.emit(sample_log_record_with_args)
        handler.close()

        lines = handler.path.read_text(encoding="utf-8").splitlines()
        assert len(lines) == 2
        data = json.loads(lines[0])
        assert data["message"] == "Seed : accuracy"
        assert data["customargs"] == [42, "kNN", 0.9375]
        assert data["levelname"] == "INFO"
        assert data["lineno"] == 42

    def test_json_formatter_respects_traceback_frames(self, monkeypatch):
        """Test ASDBENCH_TRACEBACK_FRAMES reaches the formatter."""
        from asdbench.config import get_settings

        monkeypatch.setenv("ASDBENCH_TRACEBACK_FRAMES", "3")
        get_settings.reset()

        formatter = create_json_formatter()

        assert formatter._traceback.max_frames == 3
