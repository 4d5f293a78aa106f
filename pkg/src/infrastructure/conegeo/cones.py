"""Time grids and discrete parabolic cones Gamma^lambda(x)."""
from typing import Optional

import structlog

from ...domain.constants import DEFAULT_T_MAX, DEFAULT_TIME_LEVELS
from ...domain.entities import ConeSampling
from ...domain.value_objects import TimeGrid, TorusGrid
from ..lattice import ball_offsets, is_clamped

logger = structlog.get_logger(__name__)


def make_time_grid(t_min: float, t_max: float, levels: int) -> TimeGrid:
    """Geometric samples t_j = t_min rho^j; raises InvalidTimeGridError."""
    return TimeGrid(float(t_min), float(t_max), levels)


def default_time_grid(grid: TorusGrid, levels: int = DEFAULT_TIME_LEVELS, t_max: Optional[float] = None) -> TimeGrid:
    """t_min = h (smaller cones hold only their vertex), t_max = 1/4."""
    return TimeGrid(grid.spacing, DEFAULT_T_MAX if t_max is None else t_max, levels)


def build_cone_sampling(grid: TorusGrid, time_grid: TimeGrid, aperture: float) -> ConeSampling:
    """Offsets o with periodic |o| < lambda t_j for every level, 0 always included."""
    radii = aperture * time_grid.samples
    offsets = tuple(ball_offsets(grid, float(r)) for r in radii)
    clamped = sum(1 for r in radii if is_clamped(r))
    if clamped:
        logger.warning(
            "cone_levels_clamped",
            aperture=aperture,
            clamped_levels=clamped,
            levels=time_grid.levels,
        )
    return ConeSampling(aperture, grid, time_grid, offsets)
