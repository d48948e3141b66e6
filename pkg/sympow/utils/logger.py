# sympow/utils/logger.py
"""
Shared logger.

Messages lead with a subsystem tag, optionally behind an emoji:

    from sympow.utils.logger import logger

    logger.debug("🧮 [GB] 12 pairs, 3 reductions to zero")

The tag is lifted into ``record["extra"]["tag"]`` and rendered as its own
column, so console lines read ``+0:00:01.204 | DEBUG | GB | 12 pairs ...``
with the time elapsed since start.

Environment variables:
    - SYMPOW_LOG_LEVEL: DEBUG/INFO/WARNING/ERROR, default WARNING
    - SYMPOW_LOG_TO_FILE: true/false, default false
    - SYMPOW_LOG_FILE: JSON-lines log file, default logs/sympow.log

Console output goes to stderr so tables and JSON on stdout stay clean.
"""

import os
import re
import sys
from pathlib import Path
from typing import Optional

from loguru import logger as _logger

LOG_LEVEL = os.getenv("SYMPOW_LOG_LEVEL", "WARNING").upper()
LOG_TO_FILE = os.getenv("SYMPOW_LOG_TO_FILE", "false").lower() == "true"
LOG_FILE = os.getenv("SYMPOW_LOG_FILE", "logs/sympow.log")

UNTAGGED = "-"

_TAG = re.compile(r"^\W*\[([\w-]+)\]\s*")

CONSOLE_FORMAT = (
    "<green>+{elapsed}</green> | "
    "<level>{level: <7}</level> | "
    "<cyan>{extra[tag]: <8}</cyan> | "
    "{message}"
)

# DEBUG adds the call site
DEBUG_FORMAT = (
    "<green>+{elapsed}</green> | "
    "<level>{level: <7}</level> | "
    "<cyan>{extra[tag]: <8}</cyan> | "
    "<dim>{name}:{function}:{line}</dim> | "
    "{message}"
)

_console_handler: Optional[int] = None


def _split_tag(record: dict) -> None:
    """Move a leading ``[Tag]`` (and any emoji before it) out of the message."""
    match = _TAG.match(record["message"])
    if match:
        record["extra"]["tag"] = match.group(1)
        record["message"] = record["message"][match.end():]
    else:
        record["extra"].setdefault("tag", UNTAGGED)


def _add_console(level: str) -> int:
    return _logger.add(
        sys.stderr,
        format=DEBUG_FORMAT if level == "DEBUG" else CONSOLE_FORMAT,
        level=level,
        colorize=True,
        diagnose=False,
    )


def _setup_logger():
    """Install the patcher and sinks (runs on import)."""
    global _console_handler

    _logger.remove()
    _logger.configure(patcher=_split_tag, extra={"tag": UNTAGGED})
    _console_handler = _add_console(LOG_LEVEL)

    if LOG_TO_FILE:
        Path(LOG_FILE).parent.mkdir(parents=True, exist_ok=True)
        # one JSON object per line; the tag sits in record.extra
        _logger.add(
            LOG_FILE,
            level=LOG_LEVEL,
            serialize=True,
            rotation="10 MB",
            retention="30 days",
            compression="zip",
            diagnose=False,
            encoding="utf-8",
        )
        _logger.info(f"📝 [Log] file output enabled: {LOG_FILE}")


def configure_logging(level: str) -> None:
    """Replace the console sink with one at ``level`` (used by ``-v`` and the config file)."""
    global _console_handler
    level = level.upper()
    if _console_handler is not None:
        _logger.remove(_console_handler)
    _console_handler = _add_console(level)


_setup_logger()

logger = _logger

__all__ = ["logger", "configure_logging"]
