"""Calderon reproducing formula f = C int_0^inf (t^{2m}L)^{M+2} e^{-2 t^{2m} L} f dt/t."""
from functools import lru_cache

import numpy as np
import structlog
from scipy.integrate import quad

from ...domain.constants import CALDERON_QUADRATURE_TOLERANCE
from ...domain.entities import SpectralFactorization
from ...domain.exceptions import KernelObstructionError
from ...domain.specifications import MeanZeroSpecification
from ...domain.value_objects import GridFunction, TimeGrid
from ..funcalc import calderon_symbol, matrix_function

logger = structlog.get_logger(__name__)


@lru_cache(maxsize=64)
def calderon_constant(M: int, m: int) -> float:
    """
    1 / int_0^inf t^{2m(M+2)} e^{-2 t^{2m}} dt/t by adaptive quadrature.

    In s = t^{2m} the integral is Gamma(M+2) / (2m 2^{M+2}).
    """
    power = 2 * m * (M + 2)

    def integrand(t: float) -> float:
        return t ** (power - 1) * np.exp(-2.0 * t ** (2 * m))

    head, _ = quad(integrand, 0.0, 1.0, epsabs=0.0, epsrel=CALDERON_QUADRATURE_TOLERANCE, limit=200)
    tail, _ = quad(integrand, 1.0, np.inf, epsabs=0.0, epsrel=CALDERON_QUADRATURE_TOLERANCE, limit=200)
    return 1.0 / (head + tail)


def calderon_reproduce(fact: SpectralFactorization, f: GridFunction, M: int, time_grid: TimeGrid) -> GridFunction:
    """
    C sum_j Delta (t_j^{2m} L)^{M+2} e^{-2 t_j^{2m} L} f over the time grid.

    Raises:
        KernelObstructionError: if f is not mean-zero
    """
    if M < 0:
        raise ValueError(f"M must be >= 0, received: {M}")
    if not MeanZeroSpecification().is_satisfied_by(f):
        raise KernelObstructionError("calderon_reproduce", f.mean())
    constant = calderon_constant(M, fact.m)
    total = np.zeros(f.grid.total_points, dtype=np.complex128)
    for t in time_grid.samples:
        total += matrix_function(fact, calderon_symbol(M, t ** (2 * fact.m))).apply_values(f.flat)
    result = GridFunction(f.grid, constant * time_grid.log_weight * total)
    logger.debug("calderon_reproduced", M=M, levels=time_grid.levels, constant=constant)
    return result


def reproduction_error(fact: SpectralFactorization, f: GridFunction, M: int, time_grid: TimeGrid) -> float:
    """||reproduce(f) - f||_2 / ||f||_2"""
    scale = f.l2_norm()
    if scale == 0:
        return 0.0
    return (calderon_reproduce(fact, f, M, time_grid) - f).l2_norm() / scale
