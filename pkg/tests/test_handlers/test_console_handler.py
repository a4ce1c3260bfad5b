"""Tests for ConsoleHandler."""

import logging
import sys

from rich.console import Console

from asdbench.handlers import ConsoleHandler


def _handler() -> tuple[ConsoleHandler, Console]:
    console = Console(record=True, width=100, force_terminal=False)
    return ConsoleHandler.create_rich_handler(console=console), console


def _record(level: int, msg: str, args: tuple = (), exc_info=None) -> logging.LogRecord:
    return logging.LogRecord(
        name="asdbench.test",
        level=level,
        pathname="/test.py",
        lineno=1,
        msg=msg,
        args=args,
        exc_info=exc_info,
    )


class TestConsoleHandler:
    """Test suite for ConsoleHandler."""

    def test_create_rich_handler_level(self):
        """Test the factory sets the requested level."""
        handler = ConsoleHandler.create_rich_handler(level=logging.WARNING)

        assert handler.level == logging.WARNING

    def test_level_codes(self):
        """Test WARNING renders with its four-letter code."""
        handler, console = _handler()

        handler.emit(_record(logging.WARNING, "Dropped %d rows", (12,)))

        output = console.export_text()
        assert "WARN" in output
        assert "Dropped 12 rows" in output

    def test_structured_arguments_render_panel(self):
        """Test container arguments render as a JSON panel."""
        handler, console = _handler()

        handler.emit(_record(logging.INFO, "Class balance %s", ({"NO": 50, "YES": 30},)))

        output = console.export_text()
        assert "Arguments" in output
        assert '"YES": 30' in output

    def test_error_with_exception_prints_panel(self):
        """Test ERROR records with exception info print a traceback panel."""
        handler, console = _handler()
        try:
            raise RuntimeError("solver diverged")
        except RuntimeError:
            exc_info = sys.exc_info()

        handler.emit(_record(logging.ERROR, "Fit failed", exc_info=exc_info))

        output = console.export_text()
        assert "Fit failed" in output
        assert "RuntimeError" in output
        assert "solver diverged" in output
