"""Radial and non-tangential maximal functions of the heat extension."""
from enum import Enum
from typing import Optional

import numpy as np
import structlog

from ...domain.constants import DEFAULT_APERTURE
from ...domain.entities import CutoffDescriptor, SpectralFactorization
from ...domain.exceptions import InvalidFunctionalError
from ...domain.value_objects import GridFunction, TimeGrid
from ..conegeo import heat_levels
from ..lattice import ball_maxima, ball_offsets, ball_sums, gradient_magnitude, neighbour_table
from .cutoff import localized_cutoff

logger = structlog.get_logger(__name__)

_CHUNK_ENTRIES = 1 << 20


class MaximalKind(Enum):
    RADIAL = "radial"
    NONTANGENTIAL = "nontangential"
    RADIAL_GRAD = "radial_grad"
    NONTANGENTIAL_GRAD = "nontangential_grad"
    CUTOFF = "cutoff"

    @property
    def radial(self) -> bool:
        return self in (MaximalKind.RADIAL, MaximalKind.RADIAL_GRAD)

    @property
    def gradient(self) -> bool:
        return self in (MaximalKind.RADIAL_GRAD, MaximalKind.NONTANGENTIAL_GRAD)


def _integrand(u: np.ndarray, fact: SpectralFactorization, t: float, gradient: bool) -> np.ndarray:
    """|u|^2, or sum_{k<m} |(t nabla)^k u|^2 for the gradient-augmented kinds."""
    if not gradient:
        return np.abs(u) ** 2
    grid = fact.source.grid
    return sum(gradient_magnitude(u, grid, k, scale=t) ** 2 for k in range(fact.m))


def _cutoff_maximal(
    fact: SpectralFactorization,
    heat: np.ndarray,
    time_grid: TimeGrid,
    aperture: float,
    cutoff: CutoffDescriptor,
) -> np.ndarray:
    """
    sup over (y, t) in the cone of x of the (lambda t)^{-n} average over B(y, lambda t)
    of |(t nabla)^{m-1}(psi_{x,t} u_t)|^2; psi depends on the vertex x.
    """
    grid = fact.source.grid
    size = grid.total_points
    chunk = max(1, _CHUNK_ENTRIES // size)
    best = np.zeros(size)
    for j, t in enumerate(time_grid.samples):
        offsets = ball_offsets(grid, aperture * t)
        table = neighbour_table(grid, offsets)
        weight = grid.cell_volume / (aperture * t) ** grid.n
        u = heat[j]
        for start in range(0, size, chunk):
            sites = np.arange(start, min(start + chunk, size))
            profiles = np.stack([
                localized_cutoff(cutoff, grid, grid.site_from_index(int(s)), t) for s in sites
            ])
            energy = gradient_magnitude(profiles * u, grid, fact.m - 1, scale=t) ** 2
            sums = ball_sums(grid, energy, offsets).reshape(len(sites), size)
            in_cone = sums[np.arange(len(sites))[:, None], table[sites]]
            best[sites] = np.maximum(best[sites], weight * in_cone.max(axis=1))
    return np.sqrt(best).reshape(grid.shape)


def maximal_function(
    fact: SpectralFactorization,
    f: GridFunction,
    kind: MaximalKind,
    time_grid: TimeGrid,
    aperture: float = DEFAULT_APERTURE,
    cutoff: Optional[CutoffDescriptor] = None,
) -> GridFunction:
    """
    Sup over the sampled cone of L^2 ball averages of the heat extension.

    Radial kinds use y = x only; ball averages carry the weight h^n/(lambda t)^n.
    """
    kind = MaximalKind(kind)
    heat = heat_levels(fact, f, 0, time_grid)
    if kind is MaximalKind.CUTOFF:
        if cutoff is None:
            raise InvalidFunctionalError("cutoff maximal function needs a CutoffDescriptor")
        if cutoff.order < fact.m - 1:
            raise InvalidFunctionalError(
                f"cutoff derivative bounds cover order {cutoff.order}, need {fact.m - 1}"
            )
        return GridFunction(f.grid, _cutoff_maximal(fact, heat, time_grid, aperture, cutoff))

    grid = f.grid
    best = np.zeros(grid.shape)
    for j, t in enumerate(time_grid.samples):
        offsets = ball_offsets(grid, aperture * t)
        weight = grid.cell_volume / (aperture * t) ** grid.n
        averages = np.sqrt(weight * ball_sums(grid, _integrand(heat[j], fact, t, kind.gradient), offsets).real)
        if not kind.radial:
            averages = ball_maxima(grid, averages, offsets)
        best = np.maximum(best, averages)
    return GridFunction(grid, best)
