"""
(p, 2, M, epsilon)_L molecules on the torus.

A molecule is built from a witness b supported in B as alpha = c (r_B^{2m} L)^M b,
so every (r_B^{2m} L)^{-l} alpha = c (r_B^{2m} L)^{M-l} b is a forward
application and L is never inverted.
"""
from itertools import product
from typing import List, Optional, Sequence

import numpy as np
import structlog

from ...domain.constants import MIN_MOLECULE_RADIUS_IN_SPACINGS
from ...domain.entities import EllipticOperator, MolecularRepresentation, Molecule, SpectralFactorization
from ...domain.exceptions import MoleculeConstructionError, MoleculePreconditionError, ShapeMismatchError
from ...domain.value_objects import Ball, GridFunction
from ..functionals import localized_cutoff, make_cutoff_descriptor
from ..lattice import annulus_indices, ball_measure, max_faithful_ring
from .quasinorm import hardy_quasinorm

logger = structlog.get_logger(__name__)

_WITNESS_BAND = 3
_REQUIRED_RINGS = 2


def _operator(target) -> EllipticOperator:
    return target.source if isinstance(target, SpectralFactorization) else target


def scaled_powers(op: EllipticOperator, witness: GridFunction, radius: float, M: int) -> List[np.ndarray]:
    """[(r^{2m} L)^{M-l} b for l = 0..M] as flat vectors."""
    scale = radius ** (2 * op.m)
    powers = [witness.flat.astype(np.complex128)]
    for _ in range(M):
        powers.append(scale * op.apply(powers[-1]))
    return powers[::-1]


def _ring_norms(grid, vector: np.ndarray, ball: Ball, rings: int) -> np.ndarray:
    return np.array([
        np.sqrt(grid.cell_volume * np.sum(np.abs(vector[annulus_indices(grid, ball, i)]) ** 2))
        for i in range(rings + 1)
    ])


def _ring_weights(grid, ball: Ball, p: float, epsilon: float, rings: int) -> np.ndarray:
    """2^{-i eps} |2^i B|^{1/2 - 1/p} with the discrete ball measure."""
    return np.array([
        2.0 ** (-i * epsilon) * ball_measure(grid, ball.radius * 2 ** i) ** (0.5 - 1.0 / p)
        for i in range(rings + 1)
    ])


def _bounds_table(op, candidate, witness, ball, p, M, epsilon) -> np.ndarray:
    grid = op.grid
    rings = max(max_faithful_ring(ball), 0)
    powers = scaled_powers(op, witness, ball.radius, M)
    powers[0] = candidate.flat
    weights = _ring_weights(grid, ball, p, epsilon, rings)
    return np.stack([_ring_norms(grid, vector, ball, rings) / weights for vector in powers])


def verify_molecule(
    target,
    candidate: GridFunction,
    witness: GridFunction,
    ball: Ball,
    p: float,
    M: int,
    epsilon: float,
) -> np.ndarray:
    """
    achieved_bounds[l, i] for l = 0..M and the rings that fit in the torus.

    Violations (entries > 1) are reported, not raised.
    """
    op = _operator(target)
    if candidate.grid != op.grid or witness.grid != op.grid:
        raise ShapeMismatchError(op.grid, (candidate.grid, witness.grid))
    table = _bounds_table(op, candidate, witness, ball, p, M, epsilon)
    if np.max(table, initial=0.0) > 1.0:
        logger.info("molecule_bound_exceeded", worst=float(np.max(table)), ball=ball.to_dict())
    return table


def _check_preconditions(op: EllipticOperator, ball: Ball, p: float, M: int, epsilon: float) -> None:
    n, m = op.grid.n, op.m
    if not 0 < p <= 1:
        raise MoleculePreconditionError(f"p must lie in (0, 1], received p={p}")
    if M < 1:
        raise MoleculePreconditionError(f"M must be >= 1, received M={M}")
    threshold = n / (2 * m) * (1.0 / p - 0.5)
    if not M > threshold:
        raise MoleculePreconditionError(f"need M > n/(2m)(1/p - 1/2) = {threshold:.4f}, received M={M}")
    if not epsilon > 0:
        raise MoleculePreconditionError(f"epsilon must be positive, received {epsilon}")
    minimum = MIN_MOLECULE_RADIUS_IN_SPACINGS * op.grid.spacing
    if ball.radius < minimum - 1e-12:
        raise MoleculePreconditionError(
            f"ball radius {ball.radius} below {MIN_MOLECULE_RADIUS_IN_SPACINGS} lattice spacings ({minimum})"
        )


def random_witness(op: EllipticOperator, ball: Ball, seed: int) -> GridFunction:
    """Smooth bump supported in B times a seeded low-band trigonometric polynomial."""
    grid = op.grid
    rng = np.random.default_rng(seed)
    modes = list(product(range(-_WITNESS_BAND, _WITNESS_BAND + 1), repeat=grid.n))
    coeffs = rng.standard_normal(len(modes)) + 1j * rng.standard_normal(len(modes))
    axes = np.meshgrid(*([np.arange(grid.points_per_axis) * grid.spacing] * grid.n), indexing="ij")
    carrier = np.zeros(grid.shape, dtype=np.complex128)
    for k, c in zip(modes, coeffs):
        carrier += c * np.exp(2j * np.pi * sum(kj * xj for kj, xj in zip(k, axes)))
    # profile(2|z-x|/r) vanishes for |z-x| >= r
    bump = localized_cutoff(make_cutoff_descriptor(0), grid, ball.center, ball.radius / 2.0)
    return GridFunction(grid, bump * carrier)


def generate_molecule(
    target,
    ball: Ball,
    p: float,
    M: int,
    epsilon: float,
    seed: int,
) -> Molecule:
    """
    Draw a witness b in B and normalize alpha = c (r^{2m} L)^M b so that the
    worst achieved bound is exactly 1.

    Raises:
        MoleculePreconditionError: M, p, epsilon or the radius out of range
        MoleculeConstructionError: fewer than two annuli fit in the torus
    """
    op = _operator(target)
    _check_preconditions(op, ball, p, M, epsilon)
    usable = max_faithful_ring(ball)
    if usable < _REQUIRED_RINGS:
        raise MoleculeConstructionError(usable, _REQUIRED_RINGS)

    witness = random_witness(op, ball, seed)
    raw = GridFunction(op.grid, scaled_powers(op, witness, ball.radius, M)[0])
    table = _bounds_table(op, raw, witness, ball, p, M, epsilon)
    worst = float(np.max(table))
    if worst == 0.0:
        raise MoleculeConstructionError(usable, _REQUIRED_RINGS)
    c = 1.0 / worst

    molecule = Molecule(
        sample=raw * c,
        ball=ball,
        p=p,
        M=M,
        epsilon=epsilon,
        witness=witness * c,
        achieved_bounds=table * c,
        normalization=c,
        seed=seed,
    )
    logger.debug("molecule_generated", seed=seed, ball=ball.to_dict(), max_ring=molecule.max_ring)
    return molecule


def molecular_representation(
    molecules: Sequence[Molecule],
    coefficients: Sequence[complex],
    target: Optional[GridFunction] = None,
) -> MolecularRepresentation:
    p = molecules[0].p if molecules else 1.0
    return MolecularRepresentation(list(molecules), list(coefficients), p, target)


def molecule_sum(fact: SpectralFactorization, representation: MolecularRepresentation, time_grid) -> dict:
    """||sum lambda_j alpha_j||_{H_L^p}^p / sum |lambda_j|^p for one representation."""
    f = representation.reconstruct()
    p = representation.p
    norm = hardy_quasinorm(fact, f, p, time_grid)
    p_sum = representation.p_sum
    return {
        "p": p,
        "molecules": len(representation.molecules),
        "hardy_p_power": norm ** p,
        "p_sum": p_sum,
        "ratio": norm ** p / p_sum if p_sum > 0 else float("nan"),
        "all_verified": representation.all_verified,
    }
