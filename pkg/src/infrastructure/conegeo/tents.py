"""Tent fields F(y, t_j) and the A-functional."""
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Union

import numpy as np
import structlog

from ...domain.entities import ConeSampling, SpectralFactorization, TentField
from ...domain.exceptions import InvalidSpectralArgumentError, ShapeMismatchError
from ...domain.value_objects import GridFunction, TimeGrid
from ..funcalc import matrix_function, qk_symbol
from ..lattice import ball_sums, gradient_magnitude, lp_quasinorm_values, neighbour_table
from .cones import build_cone_sampling

logger = structlog.get_logger(__name__)


class GeneratorKind(Enum):
    QK = "qk"
    GRADIENT_QK = "grad_qk"
    SEMIGROUP = "semigroup"


@dataclass(frozen=True)
class TentGenerator:
    """
    Integrand of a tent field.

    QK:          (t^{2m} L)^k e^{-t^{2m} L} f, k >= 1
    GRADIENT_QK: |(t nabla)^m (t^{2m} L)^k e^{-t^{2m} L} f|, k >= 0
    SEMIGROUP:   e^{-t^{2m} L} f
    """

    kind: GeneratorKind
    k: int = 0

    def __post_init__(self):
        if self.k < 0:
            raise InvalidSpectralArgumentError("k", self.k, "generator power must be >= 0")
        if self.kind is GeneratorKind.QK and self.k < 1:
            raise InvalidSpectralArgumentError("k", self.k, "Q_k generator needs k >= 1")

    @classmethod
    def qk(cls, k: int) -> 'TentGenerator':
        return cls(GeneratorKind.QK, k)

    @classmethod
    def gradient(cls, k: int) -> 'TentGenerator':
        return cls(GeneratorKind.GRADIENT_QK, k)

    @classmethod
    def semigroup(cls) -> 'TentGenerator':
        return cls(GeneratorKind.SEMIGROUP, 0)

    @property
    def label(self) -> str:
        if self.kind is GeneratorKind.SEMIGROUP:
            return "semigroup"
        prefix = "grad_m*" if self.kind is GeneratorKind.GRADIENT_QK else ""
        return f"{prefix}Q_{self.k}"


def heat_levels(fact: SpectralFactorization, f: GridFunction, k: int, time_grid: TimeGrid) -> np.ndarray:
    """(t_j^{2m} L)^k e^{-t_j^{2m} L} f for every level, shape (J, *grid.shape)."""
    if f.grid != fact.source.grid:
        raise ShapeMismatchError(fact.source.grid, f.grid)
    rows = [
        matrix_function(fact, qk_symbol(k, t ** (2 * fact.m))).apply_values(f.flat)
        for t in time_grid.samples
    ]
    return np.stack(rows).reshape((time_grid.levels,) + f.grid.shape)


def build_tent_field(
    fact: SpectralFactorization,
    f: GridFunction,
    generator: TentGenerator,
    time_grid: TimeGrid,
) -> TentField:
    """F(y, t_j) per generator; the gradient kind stores the pointwise magnitude."""
    values = heat_levels(fact, f, generator.k, time_grid)
    if generator.kind is GeneratorKind.GRADIENT_QK:
        scales = time_grid.samples
        values = np.stack([
            gradient_magnitude(values[j], f.grid, fact.m, scale=scales[j])
            for j in range(time_grid.levels)
        ])
    return TentField(f.grid, time_grid, values)


def _cone_for(F: TentField, cone: Union[ConeSampling, float]) -> ConeSampling:
    if isinstance(cone, ConeSampling):
        if cone.grid != F.grid or cone.time_grid != F.time_grid:
            raise ShapeMismatchError((F.grid, F.time_grid), (cone.grid, cone.time_grid))
        return cone
    return build_cone_sampling(F.grid, F.time_grid, float(cone))


def _level_weights(F: TentField) -> np.ndarray:
    """Delta h^n / t_j^n"""
    tg = F.time_grid
    return tg.log_weight * F.grid.cell_volume / tg.samples ** F.grid.n


def a_functional_field(
    F: TentField,
    cone: Union[ConeSampling, float] = 1.0,
    levels: Optional[slice] = None,
) -> np.ndarray:
    """
    A(F)(x)^2 = sum_j Delta sum_{o in cone_j} h^n |F(x+o, t_j)|^2 / t_j^n at every
    site; returns A(F) with shape grid.shape.

    levels restricts the sum to a window of t_j (truncated cones).
    """
    sampling = _cone_for(F, cone)
    weights = _level_weights(F)
    energy = np.abs(F.values) ** 2
    total = np.zeros(F.grid.shape)
    selected = range(F.time_grid.levels)[levels] if levels is not None else range(F.time_grid.levels)
    for j in selected:
        offsets = sampling.offsets_per_level[j]
        total += weights[j] * ball_sums(F.grid, energy[j], offsets).real
    return np.sqrt(total)


def a_functional(F: TentField, aperture: Union[ConeSampling, float], x) -> float:
    """A(F) at a single site."""
    sampling = _cone_for(F, aperture)
    site = F.grid.normalize_site(x)
    flat_site = int(np.ravel_multi_index(site, F.grid.shape))
    weights = _level_weights(F)
    total = 0.0
    for j, offsets in enumerate(sampling.offsets_per_level):
        neighbours = neighbour_table(F.grid, offsets)[flat_site]
        total += weights[j] * float(np.sum(np.abs(F.values[j].reshape(-1)[neighbours]) ** 2))
    return float(np.sqrt(total))


def tent_quasinorm(F: TentField, p: float, aperture: Union[ConeSampling, float] = 1.0) -> float:
    """||A(F)||_{L^p}"""
    return lp_quasinorm_values(F.grid, a_functional_field(F, aperture), p)


def tent_energy_profile(F: TentField) -> List[Dict[str, float]]:
    """Per-level energy h^n sum_y |F(y, t_j)|^2, one row per t_j."""
    energy = F.grid.cell_volume * np.sum(np.abs(F.values) ** 2, axis=tuple(range(1, F.values.ndim)))
    return [
        {"level": j, "t": float(t), "energy": float(e)}
        for j, (t, e) in enumerate(zip(F.time_grid.samples, energy))
    ]

