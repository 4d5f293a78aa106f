"""Logger estructurado sobre structlog detrás de LoggerPort."""
import os
from typing import Any, Dict

import numpy as np
import structlog

from ...domain.ports import LoggerPort


def _plain(value: Any) -> Any:
    """Escalares y arreglos pequeños de numpy a tipos nativos (JSON estable)."""
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist() if value.size <= 16 else f"ndarray(shape={value.shape})"
    if isinstance(value, complex):
        return {"re": value.real, "im": value.imag}
    return value


def _plain_fields(fields: Dict[str, Any]) -> Dict[str, Any]:
    return {key: _plain(value) for key, value in fields.items()}


class StructuredLogger(LoggerPort):
    """
    Logger de estudios y rutinas numéricas.

    Los campos de numpy se convierten antes de emitir, así que un
    ``q_hat=np.float64(1.9)`` sale como número también en el renderer JSON.
    Si la CLI no configuró structlog, se configura desde el entorno
    (LOG_LEVEL, LOG_FORMAT, LOG_FILE) en la primera instancia.
    """

    def __init__(self, name: str = "hardylab", **context: Any):
        _ensure_configured()
        self.context = _plain_fields(context)
        self.logger = structlog.get_logger(name).bind(**self.context)

    def _emit(self, level: str, event: str, fields: Dict[str, Any]) -> None:
        getattr(self.logger, level)(event, **_plain_fields(fields))

    def info(self, message: str, **kwargs: Any) -> None:
        self._emit("info", message, kwargs)

    def warning(self, message: str, **kwargs: Any) -> None:
        self._emit("warning", message, kwargs)

    def error(self, message: str, **kwargs: Any) -> None:
        self._emit("error", message, kwargs)

    def debug(self, message: str, **kwargs: Any) -> None:
        self._emit("debug", message, kwargs)

    def bind(self, **kwargs: Any) -> 'StructuredLogger':
        bound = StructuredLogger.__new__(StructuredLogger)
        fields = _plain_fields(kwargs)
        bound.context = {**self.context, **fields}
        bound.logger = self.logger.bind(**fields)
        return bound


def _ensure_configured() -> None:
    from ...infrastructure.logging import configure_structlog, is_configured

    if is_configured():
        return
    configure_structlog(
        log_level=os.getenv("LOG_LEVEL", "INFO"),
        use_json=os.getenv("LOG_FORMAT", "console").lower() == "json",
        log_file=os.getenv("LOG_FILE") or None,
    )
