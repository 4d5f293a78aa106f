"""
Heuristic scan of the L^p boundedness interval of the semigroup.

Only lower bounds of ||e^{-tL}||_{p->p} are available from finitely many
probes, so every estimate is labeled lower_bound_only.
"""
from typing import Dict, List, Sequence

import numpy as np
import structlog

from ...domain.constants import MIN_PQ_PROBES
from ...domain.entities import SpectralFactorization
from ...domain.exceptions import StudyPreconditionError
from ...domain.value_objects import GridFunction, TorusGrid
from ...infrastructure.elliptic import random_probe
from ...infrastructure.funcalc import matrix_function, semigroup_symbol
from ...infrastructure.lattice import lp_quasinorm, torus_distance
from .checks import InvariantCheck, upper_check

L2_TOLERANCE = 1e-10

logger = structlog.get_logger(__name__)


def narrow_gaussian(grid: TorusGrid, rng: np.random.Generator) -> GridFunction:
    """Positive bump of width 2h..6h at a random site."""
    center = tuple(int(c) for c in rng.integers(0, grid.points_per_axis, size=grid.n))
    width = float(rng.uniform(2.0, 6.0)) * grid.spacing
    return GridFunction(grid, np.exp(-0.5 * (torus_distance(grid, center) / width) ** 2))


def probe_functions(grid: TorusGrid, count: int, seed: int) -> List[GridFunction]:
    """Half oscillating random probes, half localized positive bumps."""
    rng = np.random.default_rng(seed)
    half = count // 2
    return [random_probe(grid, rng) for _ in range(half)] + [narrow_gaussian(grid, rng) for _ in range(count - half)]


def pq_interval_probe(
    fact: SpectralFactorization,
    exponents: Sequence[float],
    times: Sequence[float],
    probes: int = MIN_PQ_PROBES,
    seed: int = 0,
) -> Dict[str, object]:
    """
    rows: (p, t, max_f ||e^{-tL} f||_p / ||f||_p); sup: p -> sup over t.

    Raises:
        StudyPreconditionError: fewer than the minimum number of probes
    """
    if probes < MIN_PQ_PROBES:
        raise StudyPreconditionError("pq-probe", f"need at least {MIN_PQ_PROBES} probes, received {probes}")
    grid = fact.source.grid
    samples = probe_functions(grid, probes, seed)
    columns = np.stack([f.flat for f in samples], axis=1)
    denominators = {p: [lp_quasinorm(f, p) for f in samples] for p in exponents}

    rows: List[list] = []
    sup: Dict[float, float] = {p: 0.0 for p in exponents}
    for t in times:
        evolved = matrix_function(fact, semigroup_symbol(t)).apply_values(columns)
        for p in exponents:
            estimate = max(
                lp_quasinorm(GridFunction(grid, evolved[:, i]), p) / denominators[p][i]
                for i in range(probes)
            )
            rows.append([p, t, estimate])
            sup[p] = max(sup[p], estimate)
    logger.info("pq_interval_probed", exponents=list(exponents), times=list(times), probes=probes)
    return {"rows": rows, "sup": sup, "probes": probes, "lower_bound_only": True}


def l2_contraction_check(sup: Dict[float, float]) -> InvariantCheck:
    """The p = 2 estimate of an accretive operator never exceeds 1."""
    if 2.0 not in sup:
        return upper_check("l2_semigroup_bound", 0.0, L2_TOLERANCE, detail="p=2 not sampled")
    return upper_check("l2_semigroup_bound", sup[2.0] - 1.0, L2_TOLERANCE)


PROBE_HEADER = ["p", "t", "lower_bound"]
