from .yaml_config import YAMLConfig

__all__ = ['YAMLConfig']
