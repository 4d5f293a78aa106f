"""Puerto de logging de estudios y rutinas numéricas."""
from abc import ABC, abstractmethod
from typing import Any


class LoggerPort(ABC):
    """
    Eventos en snake_case ("invariant_checked", "constant_measured") con el
    contexto numérico (N, m, p, seed) en kwargs, nunca dentro del mensaje.
    """

    @abstractmethod
    def debug(self, message: str, **kwargs: Any) -> None: ...

    @abstractmethod
    def info(self, message: str, **kwargs: Any) -> None: ...

    @abstractmethod
    def warning(self, message: str, **kwargs: Any) -> None: ...

    @abstractmethod
    def error(self, message: str, **kwargs: Any) -> None: ...

    @abstractmethod
    def bind(self, **kwargs: Any) -> 'LoggerPort':
        """Mismo logger con más contexto (p. ej. study, member)."""
