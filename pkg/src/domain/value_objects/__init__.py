"""Value Objects del dominio: malla, multi-índices, funciones de malla y tiempos."""
from .torus_grid import TorusGrid
from .multi_index import MultiIndex
from .grid_function import GridFunction
from .time_grid import TimeGrid
from .ball import Ball

__all__ = [
    # Malla
    'TorusGrid',
    'MultiIndex',
    'Ball',

    # Funciones
    'GridFunction',

    # Tiempo
    'TimeGrid',
]
