"""Entidad de dominio para el tensor de coeficientes a_{alpha,beta}(x)."""
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Tuple

import numpy as np

from ..exceptions import NonFiniteValuesError, ShapeMismatchError
from ..value_objects import GridFunction, MultiIndex, TorusGrid


@dataclass(frozen=True, eq=False)
class CoefficientField:
    """
    Tensor denso de coeficientes complejos de un operador de orden 2m.

    El arreglo ``tensor`` tiene forma (D, D, *grid.shape) con D el número de
    multi-índices de orden m; filas y columnas siguen el orden lexicográfico de
    ``MultiIndex.of_order`` (fila alpha, columna beta). Los ceros son explícitos.
    """

    m: int
    """Semiorden (el operador tiene orden 2m)"""

    grid: TorusGrid
    """Malla donde se muestrean los coeficientes"""

    tensor: np.ndarray
    """Coeficientes a_{alpha,beta}(x), forma (D, D, *grid.shape)"""

    def __post_init__(self):
        if isinstance(self.m, bool) or not isinstance(self.m, int) or self.m < 1:
            raise ValueError(f"Half-order m must be an integer >= 1, received: {self.m}")
        arr = np.array(self.tensor, dtype=np.complex128, copy=True)
        size = len(MultiIndex.of_order(self.grid.n, self.m))
        expected = (size, size) + self.grid.shape
        if arr.shape != expected:
            raise ShapeMismatchError(expected, arr.shape)
        if not np.all(np.isfinite(arr)):
            raise NonFiniteValuesError("coefficient tensor")
        arr.setflags(write=False)
        object.__setattr__(self, "tensor", arr)

    @property
    def indices(self) -> Tuple[MultiIndex, ...]:
        return MultiIndex.of_order(self.grid.n, self.m)

    @property
    def size(self) -> int:
        """D_m, número de multi-índices de orden m."""
        return self.tensor.shape[0]

    @cached_property
    def entries(self) -> Dict[Tuple[MultiIndex, MultiIndex], GridFunction]:
        """Mapa (alpha, beta) -> a_{alpha,beta} como GridFunction."""
        idx = self.indices
        return {
            (alpha, beta): GridFunction(self.grid, self.tensor[i, j])
            for i, alpha in enumerate(idx)
            for j, beta in enumerate(idx)
        }

    @property
    def sup_bound(self) -> float:
        """Lambda_inf = max_{x, alpha, beta} |a_{alpha,beta}(x)|."""
        return float(np.max(np.abs(self.tensor)))

    def pointwise_matrices(self) -> np.ndarray:
        """Matrices D x D por sitio, forma (total_points, D, D) en orden row-major."""
        d = self.size
        return np.moveaxis(self.tensor.reshape(d, d, -1), -1, 0)

    def adjoint(self) -> 'CoefficientField':
        """a*_{alpha,beta} = conj(a_{beta,alpha})."""
        return CoefficientField(self.m, self.grid, np.conj(np.swapaxes(self.tensor, 0, 1)))

    def scaled(self, factor: complex) -> 'CoefficientField':
        return CoefficientField(self.m, self.grid, factor * self.tensor)

    def __add__(self, other: 'CoefficientField') -> 'CoefficientField':
        if other.grid != self.grid or other.m != self.m:
            raise ShapeMismatchError((self.m, self.grid), (other.m, other.grid))
        return CoefficientField(self.m, self.grid, self.tensor + other.tensor)
