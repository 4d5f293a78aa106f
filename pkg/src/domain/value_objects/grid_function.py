"""Value Object para funciones complejas muestreadas en la malla."""
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from ..constants import MEAN_ZERO_TOLERANCE
from ..exceptions import NonFiniteValuesError, ShapeMismatchError
from .torus_grid import TorusGrid

Scalar = Union[int, float, complex]


@dataclass(frozen=True, eq=False)
class GridFunction:
    """
    Función compleja sobre los sitios de un TorusGrid.

    **Características:**
    - Inmutable: el arreglo interno se marca como solo lectura
    - values siempre con forma grid.shape y dtype complex128
    - Acepta un vector plano de longitud total_points (orden row-major)

    **Reglas de negocio:**
    - Todas las muestras finitas (sin NaN/Inf)

    Example:
        >>> grid = TorusGrid(1, 8)
        >>> f = GridFunction.constant(grid, 2.0)
        >>> f.mean()
        (2+0j)
    """

    grid: TorusGrid
    values: np.ndarray

    def __post_init__(self):
        arr = np.array(self.values, dtype=np.complex128, copy=True)
        if arr.shape != self.grid.shape:
            if arr.ndim == 1 and arr.size == self.grid.total_points:
                arr = arr.reshape(self.grid.shape)
            else:
                raise ShapeMismatchError(self.grid.shape, arr.shape)
        if not np.all(np.isfinite(arr)):
            raise NonFiniteValuesError("GridFunction values")
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    # ------------------------------------------------------------------
    # constructores
    # ------------------------------------------------------------------

    @classmethod
    def constant(cls, grid: TorusGrid, value: Scalar) -> 'GridFunction':
        return cls(grid, np.full(grid.shape, value, dtype=np.complex128))

    @classmethod
    def zeros(cls, grid: TorusGrid) -> 'GridFunction':
        return cls.constant(grid, 0.0)

    @classmethod
    def from_callable(cls, grid: TorusGrid, fn: Callable[..., np.ndarray]) -> 'GridFunction':
        """Muestrea fn(x_1, ..., x_n) en los nodos x = h * indice."""
        axes = [np.arange(grid.points_per_axis) * grid.spacing] * grid.n
        mesh = np.meshgrid(*axes, indexing="ij")
        return cls(grid, fn(*mesh))

    @classmethod
    def point_mass(cls, grid: TorusGrid, site, value: Scalar = 1.0) -> 'GridFunction':
        arr = np.zeros(grid.shape, dtype=np.complex128)
        arr[grid.normalize_site(site)] = value
        return cls(grid, arr)

    # ------------------------------------------------------------------
    # consultas
    # ------------------------------------------------------------------

    @property
    def flat(self) -> np.ndarray:
        """Vector row-major de longitud total_points (vista de solo lectura)."""
        return self.values.reshape(-1)

    def magnitude(self) -> np.ndarray:
        return np.abs(self.values)

    def mean(self) -> complex:
        return complex(np.mean(self.values))

    def sup_norm(self) -> float:
        return float(np.max(np.abs(self.values)))

    def is_mean_zero(self, tol: float = MEAN_ZERO_TOLERANCE) -> bool:
        scale = max(self.sup_norm(), 1.0)
        return abs(self.mean()) <= tol * scale

    def is_zero(self, tol: float = 0.0) -> bool:
        return self.sup_norm() <= tol

    def project_mean_zero(self) -> 'GridFunction':
        return GridFunction(self.grid, self.values - np.mean(self.values))

    def inner(self, other: 'GridFunction') -> complex:
        """<f, g> = h^n sum f conj(g)."""
        self._check_same_grid(other)
        return complex(self.grid.cell_volume * np.vdot(other.values, self.values))

    def l2_norm(self) -> float:
        return float(np.sqrt(self.grid.cell_volume) * np.linalg.norm(self.flat))

    # ------------------------------------------------------------------
    # aritmética
    # ------------------------------------------------------------------

    def _check_same_grid(self, other: 'GridFunction') -> None:
        if other.grid != self.grid:
            raise ShapeMismatchError(self.grid, other.grid)

    def __add__(self, other: 'GridFunction') -> 'GridFunction':
        self._check_same_grid(other)
        return GridFunction(self.grid, self.values + other.values)

    def __sub__(self, other: 'GridFunction') -> 'GridFunction':
        self._check_same_grid(other)
        return GridFunction(self.grid, self.values - other.values)

    def __mul__(self, scalar: Scalar) -> 'GridFunction':
        return GridFunction(self.grid, scalar * self.values)

    __rmul__ = __mul__

    def __neg__(self) -> 'GridFunction':
        return GridFunction(self.grid, -self.values)

    def __repr__(self) -> str:
        return f"GridFunction(grid={self.grid}, sup={self.sup_norm():.3e})"
