"""Fourier-spectral differentiation on the periodic lattice.

Frequencies are the integers k in [-N/2, N/2); a derivative of order alpha
multiplies the k-th coefficient by prod_j (2 pi i k_j)^{alpha_j}. This is
exact on the band the lattice resolves.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

import numpy as np

from ...domain.exceptions import ShapeMismatchError
from ...domain.value_objects import GridFunction, MultiIndex, TorusGrid


def integer_frequencies(grid: TorusGrid) -> np.ndarray:
    """Integer frequencies in FFT order, e.g. [0, 1, ..., N/2-1, -N/2, ..., -1]."""
    N = grid.points_per_axis
    return np.fft.fftfreq(N, d=1.0 / N)


def frequency_mesh(grid: TorusGrid) -> Tuple[np.ndarray, ...]:
    k = integer_frequencies(grid)
    return tuple(np.meshgrid(*([k] * grid.n), indexing="ij"))


@lru_cache(maxsize=256)
def _symbol_cached(n: int, N: int, components: Tuple[int, ...]) -> np.ndarray:
    grid = TorusGrid(n, N)
    symbol = np.ones(grid.shape, dtype=np.complex128)
    for axis_freq, power in zip(frequency_mesh(grid), components):
        if power:
            symbol = symbol * (2j * np.pi * axis_freq) ** power
    symbol.setflags(write=False)
    return symbol


def derivative_symbol(grid: TorusGrid, alpha: MultiIndex) -> np.ndarray:
    """prod_j (2 pi i k_j)^{alpha_j} on the FFT frequency mesh."""
    if alpha.dimension != grid.n:
        raise ShapeMismatchError(grid.n, alpha.dimension)
    return _symbol_cached(grid.n, grid.points_per_axis, alpha.components)


def fourier_coefficients(f: GridFunction) -> np.ndarray:
    """f_hat(k) = N^{-n} sum_x f(x) e^{-2 pi i k.x}, so that ||f||_2^2 = sum |f_hat|^2."""
    return np.fft.fftn(f.values) / f.grid.total_points


def partial_derivative(f: GridFunction, alpha: MultiIndex) -> GridFunction:
    """d^alpha f by frequency-domain multiplication."""
    if alpha.order == 0:
        return f
    symbol = derivative_symbol(f.grid, alpha)
    return GridFunction(f.grid, np.fft.ifftn(symbol * np.fft.fftn(f.values)))


def differentiate_columns(grid: TorusGrid, alpha: MultiIndex, columns: np.ndarray) -> np.ndarray:
    """
    Apply d^alpha to every column of a (total_points, K) array.

    Columns are row-major lattice vectors; used for dense assembly.
    """
    if alpha.order == 0:
        return np.asarray(columns, dtype=np.complex128)
    K = columns.shape[1]
    axes = tuple(range(grid.n))
    block = np.asarray(columns, dtype=np.complex128).reshape(grid.shape + (K,))
    symbol = derivative_symbol(grid, alpha)[..., None]
    out = np.fft.ifftn(symbol * np.fft.fftn(block, axes=axes), axes=axes)
    return out.reshape(grid.total_points, K)


@dataclass(frozen=True, eq=False)
class GradientBlock:
    """Family {d^gamma f : |gamma| = k} in lexicographic order plus |nabla^k f|."""

    order: int
    indices: Tuple[MultiIndex, ...]
    components: Tuple[GridFunction, ...]
    magnitude: np.ndarray

    def energy(self) -> float:
        """||nabla^k f||_2^2 = h^n sum_x |nabla^k f|^2"""
        grid = self.components[0].grid
        return float(grid.cell_volume * np.sum(self.magnitude ** 2))


def gradient_block(f: GridFunction, k: int) -> GradientBlock:
    if k < 0:
        raise ValueError(f"Gradient order must be >= 0, received: {k}")
    if k == 0:
        return GradientBlock(0, (MultiIndex((0,) * f.grid.n),), (f,), np.abs(f.values))
    indices = MultiIndex.of_order(f.grid.n, k)
    spectrum = np.fft.fftn(f.values)
    components = tuple(
        GridFunction(f.grid, np.fft.ifftn(derivative_symbol(f.grid, gamma) * spectrum))
        for gamma in indices
    )
    magnitude = np.sqrt(sum(np.abs(c.values) ** 2 for c in components))
    return GradientBlock(k, indices, components, magnitude)


def gradient_magnitude(values: np.ndarray, grid: TorusGrid, k: int, scale: float = 1.0) -> np.ndarray:
    """
    |(scale * nabla)^k u| for a raw sample array; batched over leading axes.

    values has shape (..., *grid.shape); the derivative acts on the last n axes.
    """
    values = np.asarray(values, dtype=np.complex128)
    if k == 0:
        return np.abs(values)
    axes = tuple(range(values.ndim - grid.n, values.ndim))
    spectrum = np.fft.fftn(values, axes=axes)
    total = np.zeros(values.shape, dtype=float)
    for gamma in MultiIndex.of_order(grid.n, k):
        component = np.fft.ifftn(derivative_symbol(grid, gamma) * spectrum, axes=axes)
        total += np.abs(component) ** 2
    return (scale ** k) * np.sqrt(total)
