# Adapted from
# https://github.com/skypilot-org/skypilot/blob/86dc0f6283a335e4aa37b3c10716f90999f48ab6/sky/sky_logging.py
"""Logging configuration for coopetition.

All modules log through children of the "coopetition" logger. The console
handler level defaults to INFO and can be changed with the
COOPETITION_LOGGING_LEVEL environment variable or `set_log_level`.
"""
import logging
import os
import sys
from typing import Optional, Union

_FORMAT = "%(levelname)s %(asctime)s %(filename)s:%(lineno)d] %(message)s"
_DATE_FORMAT = "%m-%d %H:%M:%S"
_LEVEL_ENV = "COOPETITION_LOGGING_LEVEL"


class NewLineFormatter(logging.Formatter):
    """Repeats the record prefix on every continuation line so multi-line
    summaries stay aligned in the console."""

    def __init__(self, fmt: str, datefmt: Optional[str] = None) -> None:
        super().__init__(fmt, datefmt)

    def format(self, record: logging.LogRecord) -> str:
        msg = super().format(record)
        if record.message != "":
            prefix = msg.split(record.message)[0]
            msg = msg.replace("\n", "\r\n" + prefix)
        return msg


_root_logger = logging.getLogger("coopetition")
_console_handler: Optional[logging.Handler] = None


def _level_from_env() -> int:
    name = os.environ.get(_LEVEL_ENV, "INFO").upper()
    level = logging.getLevelName(name)
    return level if isinstance(level, int) else logging.INFO


def _setup_logger() -> None:
    global _console_handler
    _root_logger.setLevel(logging.DEBUG)
    if _console_handler is None:
        _console_handler = logging.StreamHandler(sys.stdout)
        _console_handler.flush = sys.stdout.flush  # type: ignore
        _console_handler.setLevel(_level_from_env())
        _root_logger.addHandler(_console_handler)
    _console_handler.setFormatter(
        NewLineFormatter(_FORMAT, datefmt=_DATE_FORMAT))
    # Keep records out of the root logger of host applications.
    _root_logger.propagate = False


# Runs once on first import; the import lock makes this thread-safe.
_setup_logger()


def init_logger(name: str) -> logging.Logger:
    logger = logging.getLogger(name)
    logger.setLevel(logging.DEBUG)
    if _console_handler not in logger.handlers:
        logger.addHandler(_console_handler)
    logger.propagate = False
    return logger


def set_log_level(level: Union[int, str]) -> None:
    """Changes the console threshold, e.g. to "DEBUG" for stage traces."""
    assert _console_handler is not None
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
    _console_handler.setLevel(level)
