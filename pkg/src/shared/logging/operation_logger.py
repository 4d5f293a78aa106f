"""Registro de estudios y rutinas largas: una línea al empezar y otra al terminar."""
import time
import uuid
from contextlib import contextmanager
from typing import Any, Dict, Generator

from ...domain.exceptions import DomainException
from ...domain.ports import LoggerPort


class OperationLogger:
    """
    Eventos ``operation_started`` y luego uno de:

    - ``operation_finished``: sin excepción, con las métricas agregadas
    - ``operation_rejected`` (warning): DomainException, es decir parámetros
      o precondiciones numéricas inválidas
    - ``operation_failed`` (error): cualquier otra excepción

    La excepción nunca se suprime.
    """

    def __init__(self, logger: LoggerPort, operation: str, **context: Any):
        self.logger = logger.bind(operation=operation, operation_id=uuid.uuid4().hex[:12])
        self.operation = operation
        self.context = context
        self.metrics: Dict[str, Any] = {}
        self._started = 0.0

    def __enter__(self) -> 'OperationLogger':
        self._started = time.perf_counter()
        self.logger.info("operation_started", **self.context)
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        fields = {
            "duration_seconds": round(time.perf_counter() - self._started, 3),
            **self.context,
            **self.metrics,
        }
        if exc_type is None:
            self.logger.info("operation_finished", **fields)
        elif issubclass(exc_type, DomainException):
            self.logger.warning("operation_rejected", error_type=exc_type.__name__, error_message=str(exc_val), **fields)
        else:
            self.logger.error("operation_failed", error_type=exc_type.__name__, error_message=str(exc_val), **fields)
        return False

    def add_metric(self, key: str, value: Any) -> None:
        self.metrics[key] = value


@contextmanager
def log_operation(logger: LoggerPort, operation: str, **context: Any) -> Generator[OperationLogger, None, None]:
    """
    Example:
        with log_operation(logger, "gaffney_study", N=64) as op:
            fit = gaffney_check(fact, ...)
            op.add_metric("q_hat", fit.q_hat)
    """
    with OperationLogger(logger, operation, **context) as op:
        yield op
