"""Operator validation and the semigroup/resolvent/square-root bench."""
import math
from itertools import combinations
from typing import List, Sequence

import numpy as np
import structlog

from ...domain.constants import ACCRETIVITY_TOLERANCE
from ...domain.entities import EllipticOperator, SpectralFactorization
from ...domain.exceptions import KernelObstructionError
from ...domain.specifications import SectorialSpecification
from ...domain.value_objects import GridFunction
from ...infrastructure.elliptic import hermitian_part_min_eigenvalue, random_probe, sector_violation
from ...infrastructure.funcalc import (
    expm_oracle,
    invsqrt_apply,
    resolvent_apply,
    semigroup_apply,
    sqrt_apply,
)
from ...infrastructure.lattice import gradient_block
from ..factories import fourier_mode
from .checks import InvariantCheck, flag_check, upper_check

logger = structlog.get_logger(__name__)

EXACT_TOLERANCE = 1e-10
ORACLE_TOLERANCE = 1e-8
SQRT_TOLERANCE = 1e-8
SECTOR_TOLERANCE = 1e-8
RESOLVENT_POINTS = (0.1, 1.0, 10.0, 100.0)


def validate_operator(op: EllipticOperator, fact: SpectralFactorization) -> List[InvariantCheck]:
    """
    Ellipticity, accretivity, sector and factorization checks.

    lambda0_hat <= Lambda0_hat and lambda1 (when certified) are recorded as
    measured values; a failed strong-ellipticity scan is reported, not raised.
    """
    checks = [
        flag_check("form_ellipticity", SectorialSpecification().is_satisfied_by(op), op.garding_lower),
        flag_check("form_bounds_ordered", op.garding_lower <= op.form_upper + 1e-12, op.form_upper),
        flag_check(
            "strong_ellipticity",
            op.certificate.certified,
            op.certificate.lambda1,
            detail=f"worst_site={op.certificate.worst_site}",
        ),
    ]
    min_hermitian = hermitian_part_min_eigenvalue(op)
    checks.append(upper_check("accretivity_defect", max(-min_hermitian, 0.0) / op.norm, ACCRETIVITY_TOLERANCE))
    excess, counted = sector_violation(fact.eigenvalues, op.type_angle, op.norm)
    checks.append(upper_check("spectrum_in_sector", max(excess, 0.0), SECTOR_TOLERANCE, detail=f"eigenvalues={counted}"))
    checks.append(upper_check("factorization_residual", fact.residual, 1e-10))
    checks.append(flag_check("kernel_is_constants", fact.kernel_dimension == 1, float(fact.kernel_dimension)))
    return checks


def _probes(fact: SpectralFactorization, count: int, seed: int) -> List[GridFunction]:
    rng = np.random.default_rng(seed)
    return [random_probe(fact.source.grid, rng) for _ in range(count)]


def _relative(a: GridFunction, b: GridFunction) -> float:
    scale = b.l2_norm()
    return (a - b).l2_norm() / scale if scale > 0 else (a - b).l2_norm()


def semigroup_law(fact: SpectralFactorization, probes: Sequence[GridFunction], times: Sequence[float]) -> InvariantCheck:
    """max ||T(s)T(t)f - T(s+t)f|| / ||f||"""
    worst = 0.0
    for f in probes:
        for s, t in combinations(sorted(times), 2):
            composed = semigroup_apply(fact, s, semigroup_apply(fact, t, f))
            worst = max(worst, (composed - semigroup_apply(fact, s + t, f)).l2_norm() / f.l2_norm())
    return upper_check("semigroup_law", worst, EXACT_TOLERANCE)


def strong_continuity(fact: SpectralFactorization, probes: Sequence[GridFunction], times: Sequence[float]) -> InvariantCheck:
    """||T(t)f - f|| / ||f|| must shrink as t decreases."""
    ordered = sorted(times, reverse=True)
    errors = []
    for t in ordered:
        errors.append(max(_relative(semigroup_apply(fact, t, f), f) for f in probes))
    monotone = all(b <= a * (1 + 1e-9) + 1e-14 for a, b in zip(errors, errors[1:]))
    return flag_check("strong_continuity", monotone, errors[-1], detail=f"errors={[round(e, 12) for e in errors]}")


def contraction(fact: SpectralFactorization, probes: Sequence[GridFunction], times: Sequence[float]) -> InvariantCheck:
    """max (||T(t)f|| / ||f|| - 1)"""
    excess = max(
        semigroup_apply(fact, t, f).l2_norm() / f.l2_norm() - 1.0 for f in probes for t in times
    )
    return upper_check("semigroup_contraction", excess, EXACT_TOLERANCE)


def resolvent_contraction(fact: SpectralFactorization, probes: Sequence[GridFunction]) -> InvariantCheck:
    """max (||lam (lam + L)^{-1} f|| / ||f|| - 1) over real lam > 0"""
    excess = max(
        lam * resolvent_apply(fact, lam, f).l2_norm() / f.l2_norm() - 1.0
        for f in probes for lam in RESOLVENT_POINTS
    )
    return upper_check("resolvent_contraction", excess, EXACT_TOLERANCE)


def sqrt_consistency(fact: SpectralFactorization, probes: Sequence[GridFunction]) -> InvariantCheck:
    """max ||L^{1/2} L^{1/2} f - L f|| / ||L f||"""
    worst = 0.0
    for f in probes:
        target = GridFunction(f.grid, fact.source.apply(f.flat))
        worst = max(worst, _relative(sqrt_apply(fact, sqrt_apply(fact, f)), target))
    return upper_check("sqrt_consistency", worst, SQRT_TOLERANCE)


def kernel_handling(fact: SpectralFactorization, times: Sequence[float]) -> List[InvariantCheck]:
    """T(t)1 = 1, L^{1/2}1 = 0 and L^{-1/2} rejects constants."""
    one = GridFunction.constant(fact.source.grid, 1.0)
    drift = max((semigroup_apply(fact, t, one) - one).sup_norm() for t in times)
    rejected = False
    try:
        invsqrt_apply(fact, one)
    except KernelObstructionError:
        rejected = True
    return [
        upper_check("semigroup_fixes_constants", drift, EXACT_TOLERANCE),
        upper_check("sqrt_annihilates_constants", sqrt_apply(fact, one).sup_norm(), 1e-8),
        flag_check("invsqrt_rejects_constants", rejected),
    ]


def closed_form_modes(fact: SpectralFactorization, times: Sequence[float]) -> InvariantCheck:
    """
    Polyharmonic operators act on e^{2 pi i k x} by |2 pi k|^{2m}: semigroup,
    resolvent and square root are compared against the scalar symbol.
    """
    grid = fact.source.grid
    m = fact.m
    worst = 0.0
    for k in range(1, min(grid.points_per_axis // 2, 9)):
        e_k = fourier_mode(grid, k)
        eigen = (2 * math.pi * k) ** (2 * m)
        for t in times:
            worst = max(worst, _relative(semigroup_apply(fact, t, e_k), e_k * math.exp(-t * eigen)))
        worst = max(worst, _relative(resolvent_apply(fact, 1.0, e_k), e_k * (1.0 / (1.0 + eigen))))
        worst = max(worst, _relative(sqrt_apply(fact, e_k), e_k * math.sqrt(eigen)))
    return upper_check("polyharmonic_closed_form", worst, EXACT_TOLERANCE)


def kato_identity(fact: SpectralFactorization, probes: Sequence[GridFunction]) -> InvariantCheck:
    """1D polyharmonic: ||L^{1/2} f|| = ||d^m f|| exactly."""
    worst = 0.0
    for f in probes:
        lhs = sqrt_apply(fact, f).l2_norm()
        rhs = math.sqrt(gradient_block(f, fact.m).energy())
        worst = max(worst, abs(lhs - rhs) / rhs)
    return upper_check("kato_identity", worst, EXACT_TOLERANCE)


def oracle_agreement(fact: SpectralFactorization, probes: Sequence[GridFunction], times: Sequence[float]) -> InvariantCheck:
    """max ||T(t)f - expm(-tL)f|| / ||expm(-tL)f||"""
    worst = 0.0
    for f in probes:
        for t in times:
            reference = expm_oracle(fact.source.matrix, t, f)
            worst = max(worst, _relative(semigroup_apply(fact, t, f), reference))
    return upper_check("expm_oracle_agreement", worst, ORACLE_TOLERANCE)


def semigroup_bench(
    fact: SpectralFactorization,
    probes: int,
    times: Sequence[float],
    seed: int = 0,
    oracle: bool = False,
    polyharmonic: bool = False,
) -> List[InvariantCheck]:
    """
    Semigroup law, strong continuity, contraction, resolvent contraction,
    square-root consistency and kernel handling over seeded probes.

    Closed-form symbol checks run for polyharmonic operators (the Kato
    identity only in 1D); the expm oracle only when requested.
    """
    samples = _probes(fact, probes, seed)
    checks = [
        semigroup_law(fact, samples[:4], times),
        strong_continuity(fact, samples, times),
        contraction(fact, samples, times),
        resolvent_contraction(fact, samples),
        sqrt_consistency(fact, samples),
    ]
    checks += kernel_handling(fact, times)
    if polyharmonic:
        checks.append(closed_form_modes(fact, times))
        if fact.source.grid.n == 1:
            checks.append(kato_identity(fact, samples))
    if oracle:
        checks.append(oracle_agreement(fact, samples[:5], times))
    logger.debug("semigroup_bench_done", checks=len(checks), probes=probes)
    return checks
