from .compact_traceback_formatter import CompactTracebackFormatter
from .console_rich_formatter import RichFormatter
from .file_json_formatter import RunJsonFormatter


__all__ = [
    "CompactTracebackFormatter",
    "RichFormatter",
    "RunJsonFormatter",
]
