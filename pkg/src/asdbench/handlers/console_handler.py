import logging

from rich.console import ConsoleRenderable, Group
from rich.logging import RichHandler
from rich.panel import Panel
from rich.text import Text

from asdbench.config import get_settings
from asdbench.helpers.formatters import RichFormatter
from asdbench.models.log_model import ConsoleLogModel


class ConsoleHandler(RichHandler):
    """Rich handler for the terminal, writing to stderr.

    Levels show as DEBG, INFO, WARN, ERRO or CRIT. Container arguments
    render as a JSON panel. Failures at ERROR and above replace the log line
    with a red traceback panel.
    """

    def __init__(self, formatter: RichFormatter | None = None, **kwargs):
        settings = get_settings()
        options = {
            "show_path": False,
            "enable_link_path": False,
            "rich_tracebacks": False,
            "log_time_format": f"[{settings.TIMESTAMP_FORMAT}]",
            **kwargs,
        }
        if options.get("console") is None:
            options["console"] = ConsoleLogModel().create_console()
        super().__init__(**options)

        self._formatter = formatter or RichFormatter(settings.TRACEBACKS_MAX_FRAMES)
        self.setFormatter(self._formatter)

    @classmethod
    def create_rich_handler(cls, level: int | str = logging.DEBUG, **kwargs) -> "ConsoleHandler":
        """Build a handler with its threshold set; ``kwargs`` go to :class:`RichHandler`."""
        handler = cls(**kwargs)
        handler.setLevel(level)
        return handler

    def get_level_text(self, record: logging.LogRecord) -> Text:
        return self._formatter.format_level(record)

    def render_message(self, record: logging.LogRecord, message: str) -> ConsoleRenderable:
        if not record.args:
            return self._formatter.format_message(record)
        return self._formatter.format_arguments(record)

    def emit(self, record: logging.LogRecord) -> None:
        if not (record.exc_info and record.levelno >= logging.ERROR):
            super().emit(record)
            return
        try:
            self.console.print()
            self.console.print(self._failure_panel(record))
        except Exception:
            self.handleError(record)

    def _failure_panel(self, record: logging.LogRecord) -> Group:
        body, title = self._formatter.format_exception(record.exc_info)
        headline = Text(record.getMessage(), style="bold white on red", justify="center")
        trace = Panel(Text.from_markup(body), title=title, title_align="left", border_style="red")
        return Group(headline, trace)
