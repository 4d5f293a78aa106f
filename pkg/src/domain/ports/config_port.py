"""Puerto del árbol de configuración de un experimento."""
from abc import ABC, abstractmethod
from typing import Any, Dict, Iterable


class ConfigPort(ABC):
    """Árbol anidado con claves de punto ("grid.N", "study.family.seed")."""

    @abstractmethod
    def load(self) -> None: ...

    @abstractmethod
    def get(self, key: str, default: Any = None) -> Any: ...

    @abstractmethod
    def set(self, key: str, value: Any) -> None: ...

    @abstractmethod
    def apply_overrides(self, overrides: Iterable[str]) -> None:
        """
        Asignaciones "a.b=valor" de la CLI; el valor se interpreta como YAML.

        Raises:
            ConfigurationError: asignación sin "=" o con clave vacía
        """

    @abstractmethod
    def get_all(self) -> Dict[str, Any]:
        """Copia profunda del árbol completo."""
