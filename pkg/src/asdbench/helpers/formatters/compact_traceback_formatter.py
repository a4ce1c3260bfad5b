"""Compact traceback rendering for log records.

One line per frame, the last one with its source line::

    src/asdbench/services/ingest_service.py:88 in encode
    src/asdbench/helpers/parsers/arff_parser.py:201  "raise ParseError(...)"
"""

import os
import traceback
from types import TracebackType


ExcInfo = tuple[type[BaseException] | None, BaseException | None, TracebackType | None]


class CompactTracebackFormatter:
    """Traceback text reduced to the frames nearest the raise site.

    Args:
        max_frames: Frames kept, counting from the raise site; 0 keeps all.
        base_dir: Frame paths are shown relative to this directory.
    """

    def __init__(self, max_frames: int = 8, base_dir: str | None = None) -> None:
        self.max_frames = max_frames
        self.base_dir = base_dir or os.getcwd()

    def _where(self, frame: traceback.FrameSummary) -> str:
        try:
            path = os.path.relpath(frame.filename, self.base_dir)
        except ValueError:
            # other drive
            path = frame.filename
        return f"{path}:{frame.lineno}"

    def format(self, exc_info: ExcInfo) -> tuple[str, str, str]:
        """Return ``(traceback_text, exception_name, exception_message)``."""
        exc_type, exc, tb = exc_info
        frames = traceback.extract_tb(tb)
        if self.max_frames:
            frames = frames[-self.max_frames :]

        lines = [f"{self._where(frame)} in {frame.name}" for frame in frames[:-1]]
        if frames:
            source = (frames[-1].line or "").strip().replace('"', '\\"')
            lines.append(f'{self._where(frames[-1])}  "{source}"')

        name = exc_type.__name__ if exc_type is not None else ""
        return "\n ".join(lines), name, "" if exc is None else str(exc)
