"""Factory de familias de funciones de prueba (todas proyectadas a media cero)."""
from itertools import product
from typing import List, Optional, Tuple

import numpy as np

from ...domain.constants import MIN_MOLECULE_RADIUS_IN_SPACINGS
from ...domain.entities import EllipticOperator, FamilyMemberDescriptor, FamilyMemberKind, FunctionFamily
from ...domain.exceptions import DomainException
from ...domain.specifications import StudyMemberSpecification
from ...domain.value_objects import Ball, GridFunction, TorusGrid
from ...infrastructure.config.experiment import FamilySection
from ...infrastructure.hardy import generate_molecule
from ...infrastructure.lattice import torus_distance
from ...shared.logging import LoggerFactory, log_skipped_member

_MOLECULE_P = 1.0
_MOLECULE_M = 2
_MOLECULE_EPSILON = 1.0
_ADMISSIBLE_MEMBER = StudyMemberSpecification(zero_tolerance=1e-12)


def _coordinates(grid: TorusGrid) -> Tuple[np.ndarray, ...]:
    axis = np.arange(grid.points_per_axis) * grid.spacing
    return tuple(np.meshgrid(*([axis] * grid.n), indexing="ij"))


def _center_site(grid: TorusGrid) -> Tuple[int, ...]:
    return (grid.points_per_axis // 2,) * grid.n


def fourier_mode(grid: TorusGrid, k: int) -> GridFunction:
    """e^{2 pi i k x_1}; frecuencia a lo largo del primer eje."""
    x = _coordinates(grid)[0]
    return GridFunction(grid, np.exp(2j * np.pi * k * x))


def gaussian_bump(grid: TorusGrid, width: float) -> GridFunction:
    """exp(-|x - c|^2 / (2 w^2)) con distancia periódica, centrada en el medio del toro."""
    r = torus_distance(grid, _center_site(grid))
    return GridFunction(grid, np.exp(-0.5 * (r / width) ** 2))


def smoothed_indicator(grid: TorusGrid, width: float) -> GridFunction:
    """Indicadora de B(c, w) suavizada en una escala de dos espaciados."""
    r = torus_distance(grid, _center_site(grid))
    return GridFunction(grid, 0.5 * (1.0 - np.tanh((r - width) / (2.0 * grid.spacing))))


def random_bandlimited(grid: TorusGrid, band: int, seed: int) -> GridFunction:
    """
    Polinomio trigonométrico con modos |k_i| <= band y amplitudes 1/(1+|k|).

    Los coeficientes dependen sólo de (band, seed), de modo que la misma
    función se muestrea en N y 2N; el modo cero se omite.
    """
    rng = np.random.default_rng(seed)
    modes = list(product(range(-band, band + 1), repeat=grid.n))
    coeffs = rng.standard_normal(len(modes)) + 1j * rng.standard_normal(len(modes))
    coords = _coordinates(grid)
    limit = grid.points_per_axis // 2
    values = np.zeros(grid.shape, dtype=np.complex128)
    for k, c in zip(modes, coeffs):
        if not any(k) or max(abs(kj) for kj in k) >= limit:
            continue
        values += c / (1.0 + float(np.dot(k, k)) ** 0.5) * np.exp(2j * np.pi * sum(kj * xj for kj, xj in zip(k, coords)))
    return GridFunction(grid, values)


def default_descriptors(section: FamilySection) -> List[FamilyMemberDescriptor]:
    """Modos de Fourier, bumps gaussianos, aleatorios de banda limitada, indicadoras y moléculas."""
    descriptors = [FamilyMemberDescriptor.of(FamilyMemberKind.FOURIER_MODE, k=k) for k in section.fourier_modes]
    descriptors += [FamilyMemberDescriptor.of(FamilyMemberKind.GAUSSIAN_BUMP, width=w) for w in section.gaussian_widths]
    descriptors += [
        FamilyMemberDescriptor.of(FamilyMemberKind.RANDOM_BANDLIMITED, seed=section.seed + i, band=section.random_band)
        for i in range(section.random_count)
    ]
    descriptors += [
        FamilyMemberDescriptor.of(FamilyMemberKind.INDICATOR_SMOOTHED, width=w) for w in section.indicator_widths
    ]
    descriptors += [
        FamilyMemberDescriptor.of(FamilyMemberKind.MOLECULE, seed=section.seed + i) for i in range(section.molecules)
    ]
    return descriptors


def _molecule_member(grid: TorusGrid, seed: int, operator: Optional[EllipticOperator]) -> Optional[GridFunction]:
    if operator is None:
        return None
    rng = np.random.default_rng(seed)
    center = tuple(int(c) for c in rng.integers(0, grid.points_per_axis, size=grid.n))
    radius = max(MIN_MOLECULE_RADIUS_IN_SPACINGS * grid.spacing, 1.0 / 16.0)
    molecule = generate_molecule(operator, Ball(center, radius), _MOLECULE_P, _MOLECULE_M, _MOLECULE_EPSILON, seed)
    return molecule.sample


def realize_member(
    descriptor: FamilyMemberDescriptor,
    grid: TorusGrid,
    operator: Optional[EllipticOperator] = None,
) -> Optional[GridFunction]:
    """
    Realiza un descriptor en la malla; None si el miembro no es representable
    (frecuencia no resuelta, molécula sin operador).
    """
    params = descriptor.params
    kind = descriptor.kind
    if kind is FamilyMemberKind.FOURIER_MODE:
        if abs(params["k"]) >= grid.points_per_axis // 2:
            return None
        return fourier_mode(grid, params["k"])
    if kind is FamilyMemberKind.GAUSSIAN_BUMP:
        return gaussian_bump(grid, params["width"])
    if kind is FamilyMemberKind.RANDOM_BANDLIMITED:
        return random_bandlimited(grid, params["band"], descriptor.seed)
    if kind is FamilyMemberKind.INDICATOR_SMOOTHED:
        return smoothed_indicator(grid, params["width"])
    return _molecule_member(grid, descriptor.seed, operator)


def build_family(
    descriptors: List[FamilyMemberDescriptor],
    grid: TorusGrid,
    operator: Optional[EllipticOperator] = None,
) -> FunctionFamily:
    """
    Realiza, proyecta a media cero y normaliza en L2; los miembros nulos o
    no representables se omiten con un evento de log.
    """
    logger = LoggerFactory.get_application_logger("function_family_factory")
    kept: List[FamilyMemberDescriptor] = []
    members: List[GridFunction] = []
    skipped: List[str] = []
    for descriptor in descriptors:
        try:
            member = realize_member(descriptor, grid, operator)
        except DomainException as e:
            log_skipped_member(logger, descriptor.label, f"construction failed: {e}")
            skipped.append(descriptor.label)
            continue
        if member is None:
            log_skipped_member(logger, descriptor.label, "not representable on this grid")
            skipped.append(descriptor.label)
            continue
        member = member.project_mean_zero()
        failures = _ADMISSIBLE_MEMBER.failures(member)
        if failures:
            log_skipped_member(logger, descriptor.label, ", ".join(failures) + " after mean projection")
            skipped.append(descriptor.label)
            continue
        kept.append(descriptor)
        members.append(member * (1.0 / member.l2_norm()))
    logger.info("function_family_built", grid=str(grid), members=len(members), skipped=len(skipped))
    return FunctionFamily(kept, members, skipped)


def create_function_family(
    section: FamilySection,
    grid: TorusGrid,
    operator: Optional[EllipticOperator] = None,
) -> FunctionFamily:
    return build_family(default_descriptors(section), grid, operator)
