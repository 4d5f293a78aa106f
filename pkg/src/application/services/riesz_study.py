"""Riesz transform nabla^m L^{-1/2} from H_L^p into the classical H^p."""
from typing import List, Optional, Sequence

import numpy as np
import structlog

from ...domain.entities import ConstantBound, FunctionFamily, SpectralFactorization
from ...domain.exceptions import StudyPreconditionError
from ...domain.value_objects import GridFunction, TimeGrid
from ...infrastructure.funcalc import riesz_transform
from ...infrastructure.functionals import SquareKind, square_function
from ...infrastructure.hardy import hardy_quasinorm
from ...infrastructure.lattice import lp_quasinorm
from .checks import map_members, safe_ratio

logger = structlog.get_logger(__name__)


def classical_hardy_norm(reference: SpectralFactorization, components: Sequence[GridFunction], p: float, time_grid: TimeGrid) -> float:
    """
    ||(sum_gamma S(g_gamma)^2)^{1/2}||_p with S the square function of the
    reference Laplacian; each derivative component is mean-zero.
    """
    total = np.zeros(components[0].grid.shape)
    for g in components:
        total += np.abs(square_function(reference, g, SquareKind.VERTICAL, 1, time_grid).values) ** 2
    return lp_quasinorm(np.sqrt(total), p, components[0].grid)


def riesz_study(
    fact: SpectralFactorization,
    reference: SpectralFactorization,
    family: FunctionFamily,
    exponents: Sequence[float],
    time_grid: TimeGrid,
    max_workers: int = 1,
) -> List[ConstantBound]:
    """
    Per-member C_j = ||nabla^m L^{-1/2} f_j||_{H^p} / ||f_j||_{H_L^p}.

    Raises:
        StudyPreconditionError: some p <= n/(n+m)
    """
    grid = fact.source.grid
    lower = grid.n / (grid.n + fact.m)
    for p in exponents:
        if not p > lower:
            raise StudyPreconditionError("riesz", f"p={p} must exceed n/(n+m) = {lower:.4f}")

    def member_constants(f: GridFunction) -> List[Optional[float]]:
        components = riesz_transform(fact, f).components
        return [
            safe_ratio(
                classical_hardy_norm(reference, components, p, time_grid),
                hardy_quasinorm(fact, f, p, time_grid),
            )
            for p in exponents
        ]

    per_member = map_members(member_constants, family.members, max_workers)
    bounds = []
    for i, p in enumerate(exponents):
        bounds.append(ConstantBound(
            f"riesz@p={p:g}",
            "||nabla^m L^{-1/2} f||_{H^p} <= C ||f||_{H_L^p}",
            tuple(row[i] for row in per_member),
            tuple(family.labels),
        ))
        logger.debug("riesz_constant", p=p, family_max=bounds[-1].family_max)
    return bounds
