from .console_handler import ConsoleHandler
from .file_handler import JsonLogFileHandler


__all__ = ["ConsoleHandler", "JsonLogFileHandler"]
