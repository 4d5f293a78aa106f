from .config_port import ConfigPort
from .logger_port import LoggerPort
from .spectral_symbol_port import SpectralSymbolPort

__all__ = [
    'ConfigPort',
    'LoggerPort',
    'SpectralSymbolPort',
]
