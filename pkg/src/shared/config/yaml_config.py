"""Implementación del árbol de configuración de experimentos usando YAML."""
from copy import deepcopy
from pathlib import Path
from typing import Any, Dict, Iterable, Optional

import yaml

from ...domain.exceptions import ConfigurationError
from ...domain.ports import ConfigPort


class YAMLConfig(ConfigPort):
    """
    Árbol de configuración de un experimento cargado desde YAML.

    Los valores del archivo se mezclan sobre los valores por defecto; la
    línea de comandos puede sobrescribir hojas con apply_overrides.

    Attributes:
        config_file: Ruta al archivo (None = sólo valores por defecto)
        config: Diccionario con la configuración
    """

    def __init__(self, config_file: Optional[str] = None, defaults: Optional[Dict[str, Any]] = None):
        """
        Args:
            config_file: Ruta al archivo YAML del experimento
            defaults: Árbol por defecto (p. ej. default_experiment_tree())
        """
        self.config_file = Path(config_file) if config_file else None
        self.config: Dict[str, Any] = deepcopy(defaults) if defaults else {}
        self.load()

    def get(self, key: str, default: Any = None) -> Any:
        """
        Obtiene un valor usando notación de punto.

        Args:
            key: Clave de configuración (ej: 'time_grid.levels')
            default: Valor por defecto si no existe
        """
        value: Any = self.config
        for k in key.split('.'):
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default
        return value

    def set(self, key: str, value: Any) -> None:
        keys = key.split('.')
        node = self.config
        for k in keys[:-1]:
            if not isinstance(node.get(k), dict):
                node[k] = {}
            node = node[k]
        node[keys[-1]] = value

    def apply_overrides(self, overrides: Iterable[str]) -> None:
        """
        Aplica asignaciones "a.b=valor"; el valor se interpreta como YAML
        (números, listas "[1, 2]", booleanos).

        Raises:
            ConfigurationError: si falta "=" o la clave está vacía
        """
        for item in overrides:
            key, sep, raw = item.partition('=')
            key = key.strip()
            if not sep or not key:
                raise ConfigurationError(key or item, "override must look like a.b=value")
            try:
                value = yaml.safe_load(raw) if raw.strip() else None
            except yaml.YAMLError as e:
                raise ConfigurationError(key, f"unparseable value '{raw}': {e}")
            self.set(key, value)

    def save(self, path: Optional[str] = None) -> None:
        """Guarda la configuración efectiva (p. ej. junto a los reportes)."""
        target = Path(path) if path else self.config_file
        if target is None:
            raise ConfigurationError("config", "no destination file for save()")
        target.parent.mkdir(parents=True, exist_ok=True)
        with open(target, 'w', encoding='utf-8') as f:
            yaml.safe_dump(self.config, f, default_flow_style=False, allow_unicode=True, sort_keys=True)

    def load(self) -> None:
        """
        Carga el archivo y lo mezcla sobre los valores por defecto.

        Raises:
            ConfigurationError: archivo inexistente, ilegible o no es un mapa
        """
        if self.config_file is None:
            return
        if not self.config_file.exists():
            raise ConfigurationError("config", f"file not found: {self.config_file}")
        try:
            with open(self.config_file, 'r', encoding='utf-8') as f:
                loaded = yaml.safe_load(f)
        except (OSError, yaml.YAMLError) as e:
            raise ConfigurationError("config", f"cannot read {self.config_file}: {e}")
        if loaded is None:
            return
        if not isinstance(loaded, dict):
            raise ConfigurationError("config", "top level must be a mapping")
        self._merge_configs(self.config, loaded)

    def _merge_configs(self, default: dict, loaded: dict) -> None:
        for key, value in loaded.items():
            if key in default and isinstance(default[key], dict) and isinstance(value, dict):
                self._merge_configs(default[key], value)
            else:
                default[key] = value

    def get_all(self) -> Dict[str, Any]:
        return deepcopy(self.config)
