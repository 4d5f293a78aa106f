"""Riemann-sum L^p quasi-norms on the lattice."""
from typing import Union

import numpy as np

from ...domain.exceptions import InvalidExponentError
from ...domain.value_objects import GridFunction, TorusGrid


def lp_quasinorm_values(grid: TorusGrid, values: np.ndarray, p: float) -> float:
    """(h^n sum_x |v(x)|^p)^{1/p} for a raw sample array on grid."""
    if not p > 0 or not np.isfinite(p):
        raise InvalidExponentError(p)
    magnitude = np.abs(np.asarray(values))
    peak = float(magnitude.max()) if magnitude.size else 0.0
    if peak == 0.0:
        return 0.0
    # factor out the peak so small p does not underflow
    total = grid.cell_volume * np.sum((magnitude / peak) ** p)
    return float(peak * total ** (1.0 / p))


def lp_quasinorm(f: Union[GridFunction, np.ndarray], p: float, grid: TorusGrid = None) -> float:
    if isinstance(f, GridFunction):
        return lp_quasinorm_values(f.grid, f.values, p)
    if grid is None:
        raise ValueError("grid is required when passing a raw array")
    return lp_quasinorm_values(grid, f, p)
