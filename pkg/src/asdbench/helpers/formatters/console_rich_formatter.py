"""Rich formatter for console log output."""

import logging

from rich.console import ConsoleRenderable, Group
from rich.json import JSON
from rich.markup import escape
from rich.panel import Panel
from rich.text import Text

from asdbench.models.log_model import ConsoleLogModel

from .compact_traceback_formatter import CompactTracebackFormatter


class RichFormatter(logging.Formatter):
    """Level codes, themed messages and JSON argument panels for the console."""

    def __init__(self, max_frames: int = 8) -> None:
        super().__init__()
        self._console_model = ConsoleLogModel()
        self._traceback = CompactTracebackFormatter(max_frames=max_frames)

    def format_level(self, record: logging.LogRecord) -> Text:
        short_name = self._console_model.short_level(record.levelname)
        return Text(short_name, style=self._console_model.style_for("level", record.levelname))

    def format_message(self, record: logging.LogRecord) -> Text:
        return Text(
            record.getMessage(),
            style=self._console_model.style_for("message", record.levelname),
        )

    def format_arguments(self, record: logging.LogRecord) -> ConsoleRenderable:
        """Message without placeholders followed by a JSON panel of the arguments.

        Falls back to the interpolated message when the arguments are plain
        scalars, which read better inline.
        """
        color = self._console_model.style_for("message", record.levelname)
        args = record.args if isinstance(record.args, tuple) else (record.args,)
        if all(isinstance(arg, (str, int, float)) for arg in args):
            return self.format_message(record)

        payload = (
            self._console_model.jsonable(args[0])
            if len(args) == 1
            else self._console_model.jsonable(args)
        )
        message = self._console_model.remove_placeholders(str(record.msg))
        panel = Panel.fit(
            JSON.from_data(payload, default=str),
            title="Arguments",
            title_align="left",
            border_style=color,
        )
        return Group(Text(message, style=color), panel)

    def format_exception(self, exc_info) -> tuple[str, str]:
        """``(traceback_markup, title_markup)``; empty strings without an exception."""
        if not exc_info or exc_info == (None, None, None):
            return "", ""
        tb_text, exc_name, exc_msg = self._traceback.format(exc_info)
        body = Text(tb_text, style="dim white")
        body.append(f"\n\n{exc_name}: ", style="bold red")
        body.append(exc_msg, style="yellow")
        return body.markup, Text(exc_name, style="bold red").markup

    def format(self, record: logging.LogRecord) -> str:
        return escape(record.getMessage())
