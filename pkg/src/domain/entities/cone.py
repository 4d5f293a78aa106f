"""Entidades para conos parabólicos discretos y campos en la tienda."""
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..exceptions import NonFiniteValuesError, ShapeMismatchError
from ..value_objects import TimeGrid, TorusGrid


@dataclass(frozen=True, eq=False)
class ConeSampling:
    """
    Offsets enteros del cono Gamma^lambda(x) para cada nivel t_j.

    offsets_per_level[j] tiene forma (K_j, n) con |o| < lambda * t_j en
    distancia periódica; el offset 0 siempre está presente.
    """

    aperture: float
    grid: TorusGrid
    time_grid: TimeGrid
    offsets_per_level: Tuple[np.ndarray, ...]

    def __post_init__(self):
        if not self.aperture > 0:
            raise ValueError(f"Aperture must be positive, received: {self.aperture}")
        if len(self.offsets_per_level) != self.time_grid.levels:
            raise ShapeMismatchError(self.time_grid.levels, len(self.offsets_per_level))
        frozen = []
        for offsets in self.offsets_per_level:
            arr = np.array(offsets, dtype=np.int64, copy=True).reshape(-1, self.grid.n)
            arr.setflags(write=False)
            frozen.append(arr)
        object.__setattr__(self, "offsets_per_level", tuple(frozen))

    @property
    def counts(self) -> Tuple[int, ...]:
        return tuple(len(o) for o in self.offsets_per_level)


@dataclass(frozen=True, eq=False)
class TentField:
    """Campo complejo F(y, t_j); values tiene forma (J, *grid.shape)."""

    grid: TorusGrid
    time_grid: TimeGrid
    values: np.ndarray

    def __post_init__(self):
        arr = np.array(self.values, dtype=np.complex128, copy=True)
        expected = (self.time_grid.levels,) + self.grid.shape
        if arr.shape != expected:
            raise ShapeMismatchError(expected, arr.shape)
        if not np.all(np.isfinite(arr)):
            raise NonFiniteValuesError("TentField values")
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    def scaled(self, factor: complex) -> 'TentField':
        return TentField(self.grid, self.time_grid, factor * self.values)

    def level(self, j: int) -> np.ndarray:
        return self.values[j]
