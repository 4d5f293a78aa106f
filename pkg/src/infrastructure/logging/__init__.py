"""Logging infrastructure module."""
from .config import configure_structlog, get_log_level, is_configured

__all__ = ["configure_structlog", "get_log_level", "is_configured"]
