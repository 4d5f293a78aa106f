"""Parabolic Caccioppoli inequalities for u(x, t) = e^{-t^{2m} L} f."""
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import structlog

from ...domain.constants import INJECTIVITY_RADIUS, MIN_CACCIOPPOLI_TIME_SAMPLES
from ...domain.entities import CaccioppoliResult, SpectralFactorization
from ...domain.exceptions import StudyPreconditionError
from ...domain.value_objects import GridFunction, TorusGrid
from ...infrastructure.funcalc import matrix_function, semigroup_symbol
from ...infrastructure.lattice import ball_indices, gradient_magnitude
from ..factories import random_bandlimited

VARIANTS = ("ineq1", "ineq2", "ineq3")
MAX_CONFIG_RADIUS = 0.1
MAX_CONFIG_LIFT = 0.3

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class CaccioppoliConfig:
    """Una caja parabólica (x0, r, t0) y la semilla de la función f."""

    x0: Tuple[int, ...]
    r: float
    t0: float
    seed: int

    def refined(self) -> 'CaccioppoliConfig':
        """Mismo punto físico en la malla 2N."""
        return CaccioppoliConfig(tuple(2 * c for c in self.x0), self.r, self.t0, self.seed)


def _check_box(r: float, t0: float, time_samples: int) -> None:
    if not r > 0:
        raise StudyPreconditionError("caccioppoli", f"radius must be positive, received r={r}")
    if not t0 > 3 * r:
        raise StudyPreconditionError("caccioppoli", f"need t0 > 3r, received t0={t0}, r={r}")
    if not 2 * r < INJECTIVITY_RADIUS:
        raise StudyPreconditionError("caccioppoli", f"2r = {2 * r} must stay below {INJECTIVITY_RADIUS}")
    if time_samples < MIN_CACCIOPPOLI_TIME_SAMPLES:
        raise StudyPreconditionError(
            "caccioppoli", f"need at least {MIN_CACCIOPPOLI_TIME_SAMPLES} time samples, received {time_samples}"
        )


def time_nodes(t0: float, r: float, samples: int) -> Tuple[np.ndarray, float, np.ndarray]:
    """Midpoint nodes of [t0-2r, t0+2r], their width, and the mask of the inner window |t-t0| < r."""
    width = 4 * r / samples
    nodes = t0 - 2 * r + (np.arange(samples) + 0.5) * width
    return nodes, width, np.abs(nodes - t0) < r


def heat_extension(fact: SpectralFactorization, f: GridFunction, nodes: np.ndarray) -> np.ndarray:
    """u(., t) for every node, shape (K, *grid.shape)."""
    m = fact.m
    rows = [
        matrix_function(fact, semigroup_symbol(float(t) ** (2 * m))).apply_values(f.flat)
        for t in nodes
    ]
    return np.stack(rows).reshape((len(nodes),) + f.grid.shape)


def _box_energy(grid: TorusGrid, field: np.ndarray, indices: np.ndarray, width: float, mask: np.ndarray) -> float:
    """sum over masked nodes of width * h^n sum_{x in ball} |field|^2"""
    flat = np.abs(field.reshape(field.shape[0], -1)[:, indices]) ** 2
    return float(width * grid.cell_volume * np.sum(flat[mask]))


def caccioppoli_check(
    fact: SpectralFactorization,
    f: GridFunction,
    x0,
    r: float,
    t0: float,
    variant: str = "ineq3",
    epsilon: float = 0.5,
    time_samples: int = 64,
) -> CaccioppoliResult:
    """
    LHS = iint_{inner} |nabla^m u|^2 over [t0-r, t0+r] x B(x0, r) and the
    right-hand side without its constant over [t0-2r, t0+2r] x B(x0, 2r):

    - ineq3: r^{-2m} iint |u|^2
    - ineq2: sum_{j<m} r^{-2(m-j)} iint |nabla^j u|^2
    - ineq1: r^{-2m} iint |u|^2, after moving eps iint_{outer} |nabla^m u|^2 to the left

    Raises:
        StudyPreconditionError: t0 <= 3r, 2r >= 1/2 or too few time samples
    """
    if variant not in VARIANTS:
        raise StudyPreconditionError("caccioppoli", f"unknown variant '{variant}', expected one of {VARIANTS}")
    _check_box(r, t0, time_samples)
    grid = f.grid
    m = fact.m
    nodes, width, inner = time_nodes(t0, r, time_samples)
    everywhere = np.ones_like(inner)
    u = heat_extension(fact, f, nodes)
    inner_ball = ball_indices(grid, x0, r)
    outer_ball = ball_indices(grid, x0, 2 * r)

    top = gradient_magnitude(u, grid, m)
    lhs = _box_energy(grid, top, inner_ball, width, inner)
    if variant == "ineq2":
        rhs = sum(
            r ** (-2 * (m - j)) * _box_energy(grid, gradient_magnitude(u, grid, j), outer_ball, width, everywhere)
            for j in range(m)
        )
    else:
        rhs = r ** (-2 * m) * _box_energy(grid, u, outer_ball, width, everywhere)
    numerator = lhs
    if variant == "ineq1":
        numerator = max(lhs - epsilon * _box_energy(grid, top, outer_ball, width, everywhere), 0.0)

    if rhs > 0:
        implied = numerator / rhs
    else:
        implied = 0.0 if numerator == 0 else math.inf
    return CaccioppoliResult(
        variant=variant,
        x0=tuple(grid.normalize_site(x0)),
        r=float(r),
        t0=float(t0),
        lhs=lhs,
        rhs_without_constant=float(rhs),
        implied_constant=float(implied),
        epsilon=epsilon if variant == "ineq1" else None,
    )


def random_configs(grid: TorusGrid, count: int, seed: int) -> List[CaccioppoliConfig]:
    """r in [4h, 0.1], t0 in (3r, 3r + 0.3], x0 a uniform site."""
    rng = np.random.default_rng(seed)
    low = 4 * grid.spacing
    if low >= MAX_CONFIG_RADIUS:
        raise StudyPreconditionError("caccioppoli", f"grid {grid} too coarse for radii in [4h, {MAX_CONFIG_RADIUS}]")
    configs = []
    for i in range(count):
        r = float(rng.uniform(low, MAX_CONFIG_RADIUS))
        t0 = 3 * r + float(rng.uniform(0.0, MAX_CONFIG_LIFT)) + 1e-6
        x0 = tuple(int(c) for c in rng.integers(0, grid.points_per_axis, size=grid.n))
        configs.append(CaccioppoliConfig(x0, r, t0, seed + i))
    return configs


def run_configs(
    fact: SpectralFactorization,
    configs: Sequence[CaccioppoliConfig],
    variants: Sequence[str],
    epsilon: float,
    time_samples: int,
    band: int = 8,
) -> List[CaccioppoliResult]:
    grid = fact.source.grid
    results = []
    for config in configs:
        f = random_bandlimited(grid, band, config.seed)
        for variant in variants:
            results.append(
                caccioppoli_check(fact, f, config.x0, config.r, config.t0, variant, epsilon, time_samples)
            )
    return results


def max_constants(results: Sequence[CaccioppoliResult]) -> Dict[str, float]:
    """Family max of the implied constant per variant."""
    out: Dict[str, float] = {}
    for result in results:
        out[result.variant] = max(out.get(result.variant, 0.0), result.implied_constant)
    return out


def refinement_drift(coarse: Dict[str, float], fine: Dict[str, float]) -> Dict[str, Optional[float]]:
    """max(a/b, b/a) per variant; None when a side is zero."""
    drift: Dict[str, Optional[float]] = {}
    for variant, a in coarse.items():
        b = fine.get(variant, 0.0)
        drift[variant] = max(a / b, b / a) if a > 0 and b > 0 else None
    return drift
