"""||f||_{H_L^p} = ||S_L f||_{L^p}."""
import structlog

from ...domain.constants import DEFAULT_APERTURE
from ...domain.entities import SpectralFactorization
from ...domain.specifications import MeanZeroSpecification
from ...domain.value_objects import GridFunction, TimeGrid
from ..functionals import SquareKind, square_function
from ..lattice import lp_quasinorm

logger = structlog.get_logger(__name__)


def hardy_quasinorm(fact: SpectralFactorization, f: GridFunction, p: float, time_grid: TimeGrid) -> float:
    """
    L^p quasi-norm of S_{L,1} with aperture 1.

    Inputs with a non-negligible mean are projected onto the mean-zero
    complement, with a warning.
    """
    if not MeanZeroSpecification().is_satisfied_by(f):
        logger.warning("hardy_quasinorm_mean_subtracted", mean=str(f.mean()), p=p)
        f = f.project_mean_zero()
    values = square_function(fact, f, SquareKind.VERTICAL, 1, time_grid, DEFAULT_APERTURE)
    return lp_quasinorm(values, p)
