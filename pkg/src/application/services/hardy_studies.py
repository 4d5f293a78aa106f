"""Molecule suite, molecular p-sums and Calderon reproduction."""
import math
from typing import Dict, List, Optional, Sequence

import numpy as np
import structlog

from ...domain.constants import MIN_MOLECULE_RADIUS_IN_SPACINGS
from ...domain.entities import FamilyMemberKind, FunctionFamily, Molecule, SpectralFactorization, spread_of
from ...domain.value_objects import Ball, TimeGrid
from ...infrastructure.hardy import (
    generate_molecule,
    hardy_quasinorm,
    molecular_representation,
    molecule_sum,
    reproduction_error,
)
from .checks import InvariantCheck, flag_check, map_members, upper_check

DEFAULT_MOLECULE_RADIUS = 1.0 / 16.0
BANDLIMITED_KINDS = (FamilyMemberKind.FOURIER_MODE, FamilyMemberKind.RANDOM_BANDLIMITED)

logger = structlog.get_logger(__name__)


def molecule_radius(fact: SpectralFactorization, radius: Optional[float] = None) -> float:
    grid = fact.source.grid
    return radius if radius is not None else max(MIN_MOLECULE_RADIUS_IN_SPACINGS * grid.spacing, DEFAULT_MOLECULE_RADIUS)


def generate_molecules(
    fact: SpectralFactorization,
    count: int,
    p: float,
    M: int,
    epsilon: float,
    seed: int = 0,
    radius: Optional[float] = None,
) -> List[Molecule]:
    """count seeded molecules on balls of a common radius at random centers."""
    grid = fact.source.grid
    r = molecule_radius(fact, radius)
    rng = np.random.default_rng(seed)
    molecules = []
    for i in range(count):
        center = tuple(int(c) for c in rng.integers(0, grid.points_per_axis, size=grid.n))
        molecules.append(generate_molecule(fact, Ball(center, r), p, M, epsilon, seed + i))
    return molecules


def molecule_suite(
    fact: SpectralFactorization,
    molecules: Sequence[Molecule],
    time_grid: TimeGrid,
    spread_threshold: float,
    max_workers: int = 1,
) -> Dict[str, object]:
    """
    Every molecule must verify (normalized bounds <= 1) and the family of
    ||S_L alpha||_{L^p} must have a bounded spread.
    """
    norms = map_members(lambda mol: hardy_quasinorm(fact, mol.sample, mol.p, time_grid), list(molecules), max_workers)
    spread = spread_of(norms)
    rows = [
        [i, list(mol.ball.center), mol.ball.radius, mol.worst_bound, mol.is_verified, norm]
        for i, (mol, norm) in enumerate(zip(molecules, norms))
    ]
    checks = [
        flag_check("molecules_verified", all(m.is_verified for m in molecules), float(sum(m.is_verified for m in molecules))),
        upper_check("molecule_norm_spread", spread, spread_threshold),
    ]
    logger.info("molecule_suite_measured", molecules=len(molecules), spread=spread)
    return {"rows": rows, "norms": norms, "spread": spread, "checks": checks}


MOLECULE_HEADER = ["index", "center", "radius", "worst_bound", "verified", "hardy_norm"]


def molecule_sum_study(
    fact: SpectralFactorization,
    molecules: Sequence[Molecule],
    time_grid: TimeGrid,
    seed: int = 0,
) -> Dict[str, object]:
    """||sum lambda_j alpha_j||^p_{H_L^p} / sum |lambda_j|^p for seeded coefficients."""
    rng = np.random.default_rng(seed)
    coefficients = rng.standard_normal(len(molecules)) + 1j * rng.standard_normal(len(molecules))
    representation = molecular_representation(list(molecules), list(coefficients))
    result = molecule_sum(fact, representation, time_grid)
    logger.info("molecule_sum_measured", ratio=result["ratio"], molecules=result["molecules"])
    return result


def reproduction_study(
    fact: SpectralFactorization,
    family: FunctionFamily,
    M: int,
    time_grid: TimeGrid,
    tolerance: float,
    max_workers: int = 1,
) -> Dict[str, object]:
    """Relative L^2 error of the reproducing formula on the band-limited members."""
    selected = [
        (d.label, f) for d, f in zip(family.descriptors, family.members) if d.kind in BANDLIMITED_KINDS
    ]
    errors = map_members(lambda item: reproduction_error(fact, item[1], M, time_grid), selected, max_workers)
    rows = [[label, error] for (label, _), error in zip(selected, errors)]
    worst = max(errors) if errors else math.nan
    checks: List[InvariantCheck] = [
        flag_check("reproduction_members", bool(selected), float(len(selected))),
        upper_check("calderon_reproduction_error", worst, tolerance),
    ]
    logger.info("reproduction_measured", members=len(selected), max_error=worst, levels=time_grid.levels)
    return {"rows": rows, "max_error": worst, "checks": checks}


REPRODUCTION_HEADER = ["member", "relative_error"]
