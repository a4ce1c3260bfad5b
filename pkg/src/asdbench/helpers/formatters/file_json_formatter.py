"""JSON formatter for the log file.

Messages are stored without ``%`` placeholders; the arguments go to a
separate ``customargs`` field so log lines stay machine-searchable.
"""

import logging

from pythonjsonlogger.json import JsonFormatter

from asdbench.models.log_model import FileLogModel

from .compact_traceback_formatter import CompactTracebackFormatter


def _escape(text: str) -> str:
    return text.encode("utf-8", "backslashreplace").decode("utf-8")


class RunJsonFormatter(JsonFormatter):
    """One JSON object per record, with the message template kept apart
    from its arguments.

    Attributes:
        _file_model: Placeholder removal and argument conversion.
        _traceback: Compact traceback for ``exc_*`` fields.
    """

    def __init__(self, *args, max_frames: int = 8, **kwargs) -> None:
        super().__init__(*args, **kwargs)
        self._file_model = FileLogModel()
        self._traceback = CompactTracebackFormatter(max_frames=max_frames)

    def _customargs(self, args: tuple | dict):
        if isinstance(args, tuple) and len(args) == 1:
            return self._file_model.jsonable(args[0])
        return self._file_model.jsonable(args)

    def add_fields(
        self, log_record: dict, record: logging.LogRecord, message_dict: dict
    ) -> None:
        """Add ``message``, ``customargs`` and the ``exc_*`` fields."""
        super().add_fields(log_record, record, message_dict)

        template = self._file_model.remove_placeholders(str(record.msg))
        log_record["message"] = _escape(template)

        if record.args:
            log_record["customargs"] = self._customargs(record.args)

        if not record.exc_info:
            return
        text, name, detail = self._traceback.format(record.exc_info)
        log_record.update(
            exc_info=_escape(text), exc_name=name, exc_message=_escape(detail)
        )
