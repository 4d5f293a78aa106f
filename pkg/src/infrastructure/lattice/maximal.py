"""Uncentered Hardy-Littlewood maximal function on the lattice."""
import numpy as np

from ...domain.value_objects import GridFunction
from .balls import ball_maxima, ball_offsets, ball_sums


def hardy_littlewood_maximal(f: GridFunction) -> GridFunction:
    """
    M(f)(x) = max over radii r in {h, 2h, ..., 1/2} and balls B(y, r) containing x
    of the discrete average of |f| over B(y, r).

    Averages use the discrete ball measure, so M(c) = |c| exactly.
    """
    grid = f.grid
    magnitude = np.abs(f.values)
    result = magnitude.copy()
    for j in range(1, grid.points_per_axis // 2 + 1):
        offsets = ball_offsets(grid, j * grid.spacing)
        averages = ball_sums(grid, magnitude, offsets) / len(offsets)
        # x lies in B(y, r) iff y = x - o for some offset o; the offset set is symmetric
        result = np.maximum(result, ball_maxima(grid, averages, offsets))
    return GridFunction(grid, result)
