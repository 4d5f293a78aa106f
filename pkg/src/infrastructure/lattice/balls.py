"""Periodic balls, annuli and neighbour tables.

Distances use the periodic metric min(|d|, N - |d|) * h per axis. Balls of
radius >= 1/2 (the injectivity radius) are clamped to the whole torus.
"""
from functools import lru_cache
from typing import Tuple

import numpy as np
import structlog

from ...domain.constants import INJECTIVITY_RADIUS
from ...domain.value_objects import Ball, TorusGrid

logger = structlog.get_logger(__name__)


def _offset_axis(grid: TorusGrid) -> np.ndarray:
    """Integer offsets -N/2 .. N/2-1."""
    N = grid.points_per_axis
    return np.arange(-N // 2, N // 2)


def torus_distance(grid: TorusGrid, center) -> np.ndarray:
    """Periodic distance from every site to center, shape grid.shape."""
    center = grid.normalize_site(center)
    N = grid.points_per_axis
    idx = np.meshgrid(*([np.arange(N)] * grid.n), indexing="ij")
    squared = np.zeros(grid.shape)
    for axis_idx, c in zip(idx, center):
        d = np.abs(axis_idx - c) % N
        d = np.minimum(d, N - d) * grid.spacing
        squared += d ** 2
    return np.sqrt(squared)


@lru_cache(maxsize=512)
def _offsets_cached(n: int, N: int, radius: float) -> np.ndarray:
    grid = TorusGrid(n, N)
    axis = _offset_axis(grid)
    mesh = np.meshgrid(*([axis] * n), indexing="ij")
    offsets = np.stack([m.reshape(-1) for m in mesh], axis=1)
    norms = np.sqrt(np.sum((offsets * grid.spacing) ** 2, axis=1))
    if radius < INJECTIVITY_RADIUS:
        keep = norms < radius
        keep |= np.all(offsets == 0, axis=1)
        offsets, norms = offsets[keep], norms[keep]
    # deterministic order: by norm, then lexicographic
    order = np.lexsort(tuple(offsets[:, j] for j in reversed(range(n))) + (norms,))
    result = offsets[order]
    result.setflags(write=False)
    return result


def ball_offsets(grid: TorusGrid, radius: float) -> np.ndarray:
    """
    Integer offsets o with periodic |o| < radius, shape (K, n).

    Offset 0 is always included; radius >= 1/2 returns every offset.
    """
    if not radius > 0:
        raise ValueError(f"Ball radius must be positive, received: {radius}")
    return _offsets_cached(grid.n, grid.points_per_axis, float(radius))


def is_clamped(radius: float) -> bool:
    return radius >= INJECTIVITY_RADIUS


def ball_measure(grid: TorusGrid, radius: float) -> float:
    """Discrete measure h^n * #sites of a ball."""
    return grid.cell_volume * len(ball_offsets(grid, radius))


def neighbour_table(grid: TorusGrid, offsets: np.ndarray) -> np.ndarray:
    """
    Flat indices of x + o for every site x (rows) and offset o (columns).

    Shape (total_points, K); rows follow row-major site order.
    """
    N = grid.points_per_axis
    sites = np.stack(
        [m.reshape(-1) for m in np.meshgrid(*([np.arange(N)] * grid.n), indexing="ij")], axis=1
    )
    shifted = (sites[:, None, :] + np.asarray(offsets)[None, :, :]) % N
    flat = np.zeros(shifted.shape[:2], dtype=np.int64)
    for j in range(grid.n):
        flat = flat * N + shifted[:, :, j]
    return flat


def ball_sums(grid: TorusGrid, values: np.ndarray, offsets: np.ndarray) -> np.ndarray:
    """sum_{o in offsets} v(x + o) at every site x; v may carry leading batch axes."""
    values = np.asarray(values)
    batch = values.shape[: values.ndim - grid.n]
    flat = values.reshape(batch + (grid.total_points,))
    table = neighbour_table(grid, offsets)
    sums = flat[..., table].sum(axis=-1)
    return sums.reshape(batch + grid.shape)


def ball_maxima(grid: TorusGrid, values: np.ndarray, offsets: np.ndarray) -> np.ndarray:
    """max_{o in offsets} v(x + o) at every site x (real input)."""
    values = np.asarray(values)
    batch = values.shape[: values.ndim - grid.n]
    flat = values.reshape(batch + (grid.total_points,))
    table = neighbour_table(grid, offsets)
    return flat[..., table].max(axis=-1).reshape(batch + grid.shape)


def _flat_index(grid: TorusGrid, site: Tuple[int, ...]) -> int:
    index = 0
    for c in site:
        index = index * grid.points_per_axis + c
    return index


def ball_indices(grid: TorusGrid, center, radius: float) -> np.ndarray:
    """Sorted flat indices of the sites y with periodic d(y, center) < radius."""
    if is_clamped(radius):
        logger.warning(
            "ball_radius_clamped",
            radius=float(radius),
            injectivity_radius=INJECTIVITY_RADIUS,
            grid=str(grid),
        )
    center = grid.normalize_site(center)
    offsets = ball_offsets(grid, radius)
    table = neighbour_table(grid, offsets)
    return np.sort(table[_flat_index(grid, center)])


def annulus_indices(grid: TorusGrid, ball: Ball, i: int) -> np.ndarray:
    """
    Sites of S_i(B): S_0(B) = B and S_i(B) = 2^i B minus 2^{i-1} B.

    Rings beyond the injectivity radius collapse (clamped balls coincide).
    """
    if i < 0:
        raise ValueError(f"Ring index must be >= 0, received: {i}")
    outer = ball_indices(grid, ball.center, ball.radius * 2 ** i)
    if i == 0:
        return outer
    inner = ball_indices(grid, ball.center, ball.radius * 2 ** (i - 1))
    return np.setdiff1d(outer, inner, assume_unique=True)


def max_faithful_ring(ball: Ball) -> int:
    """Largest i with 2^i r_B < 1/2 (the ring still fits in the torus); -1 if none."""
    i = -1
    while ball.radius * 2 ** (i + 1) < INJECTIVITY_RADIUS:
        i += 1
    return i
