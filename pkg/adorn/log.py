"""Central logging for adorn.

Every component logs through a child of the ``adorn`` logger. Records go to
stderr so that reports written to stdout stay byte-identical between runs.
"""

from __future__ import annotations

import logging
import sys
from typing import TextIO

ROOT = "adorn"
FORMAT = "%(asctime)s %(levelname)s %(name)s %(message)s"

_handler: logging.Handler | None = None


class _StderrHandler(logging.StreamHandler):
    """Writes to whatever ``sys.stderr`` is when a record is emitted."""

    def __init__(self) -> None:
        logging.Handler.__init__(self)

    @property
    def stream(self) -> TextIO:
        return sys.stderr

    @stream.setter
    def stream(self, value: TextIO) -> None:
        pass


def get_logger(component: str) -> logging.Logger:
    return logging.getLogger(f"{ROOT}.{component}")


def configure(level: int | str = logging.WARNING, stream: TextIO | None = None) -> None:
    global _handler

    root = logging.getLogger(ROOT)
    if _handler is not None:
        root.removeHandler(_handler)

    _handler = logging.StreamHandler(stream) if stream is not None else _StderrHandler()
    _handler.setFormatter(logging.Formatter(FORMAT))
    root.addHandler(_handler)
    root.setLevel(level.upper() if isinstance(level, str) else level)
    root.propagate = False
