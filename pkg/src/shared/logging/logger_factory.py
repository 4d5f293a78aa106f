"""Factory de loggers por estudio, componente numérico o capa de aplicación."""
from typing import Any, Dict

from ...domain.ports import LoggerPort
from .structured_logger import StructuredLogger


class LoggerFactory:
    """
    Los nombres siguen ``hardylab.<área>.<nombre>`` y cada logger lleva el
    contexto global de la corrida (environment, study, seed) más el propio.

    Example:
        LoggerFactory.set_global_context(study="gaffney", seed=7)
        logger = LoggerFactory.get_study_logger("gaffney")
    """

    _global_context: Dict[str, Any] = {}

    @classmethod
    def set_global_context(cls, **context: Any) -> None:
        cls._global_context.update(context)

    @classmethod
    def clear_global_context(cls) -> None:
        cls._global_context.clear()

    @classmethod
    def get_logger(cls, name: str, **context: Any) -> LoggerPort:
        return StructuredLogger(name=name, **{**cls._global_context, **context})

    @classmethod
    def get_study_logger(cls, study: str, **context: Any) -> LoggerPort:
        """Todos los eventos llevan study=<nombre>."""
        return cls.get_logger(f"hardylab.studies.{study}", study=study, **context)

    @classmethod
    def get_numerics_logger(cls, component: str, **context: Any) -> LoggerPort:
        return cls.get_logger(f"hardylab.numerics.{component}", component=component, **context)

    @classmethod
    def get_application_logger(cls, name: str, **context: Any) -> LoggerPort:
        return cls.get_logger(f"hardylab.application.{name}", layer="application", **context)
