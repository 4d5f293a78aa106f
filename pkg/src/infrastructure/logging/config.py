"""structlog setup for the lab.

Records go to stderr and, when a log file is given, to that file as JSON
lines. stdout is left to the study summary printed by the command line.
"""
import logging
import sys
from pathlib import Path
from typing import List, Optional

import structlog

_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

_configured = False


def get_log_level(level_str: str) -> int:
    level = level_str.upper()
    if level not in _LEVELS:
        raise ValueError(f"Invalid log level: {level_str}. Must be one of: {', '.join(_LEVELS)}")
    return getattr(logging, level)


def is_configured() -> bool:
    return _configured


def _pre_chain() -> List:
    return [
        structlog.contextvars.merge_contextvars,
        structlog.processors.add_log_level,
        structlog.processors.TimeStamper(fmt="iso"),
    ]


def _handler(stream_or_path, renderer) -> logging.Handler:
    if isinstance(stream_or_path, Path):
        stream_or_path.parent.mkdir(parents=True, exist_ok=True)
        handler: logging.Handler = logging.FileHandler(stream_or_path, encoding="utf-8")
    else:
        handler = logging.StreamHandler(stream_or_path)
    handler.setFormatter(structlog.stdlib.ProcessorFormatter(processor=renderer, foreign_pre_chain=_pre_chain()))
    return handler


def configure_structlog(log_level: str = "INFO", use_json: bool = False, log_file: Optional[str] = None) -> None:
    """
    Configure structlog and the stdlib root logger; safe to call again.

    Args:
        log_level: DEBUG, INFO, WARNING, ERROR or CRITICAL
        use_json: JSON lines on stderr instead of the console renderer
        log_file: optional path, always written as JSON lines
    """
    global _configured
    level = get_log_level(log_level)

    console = structlog.processors.JSONRenderer() if use_json else structlog.dev.ConsoleRenderer(colors=False)
    handlers = [_handler(sys.stderr, console)]
    if log_file:
        handlers.append(_handler(Path(log_file), structlog.processors.JSONRenderer()))

    root = logging.getLogger()
    for old in list(root.handlers):
        root.removeHandler(old)
        old.close()
    for handler in handlers:
        root.addHandler(handler)
    root.setLevel(level)

    structlog.configure(
        processors=_pre_chain() + [
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            structlog.stdlib.ProcessorFormatter.wrap_for_formatter,
        ],
        wrapper_class=structlog.make_filtering_bound_logger(level),
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=False,
    )
    _configured = True
