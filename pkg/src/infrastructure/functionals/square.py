"""Conical square functions S_{L,k} and S_{h,L,k}."""
from enum import Enum

from ...domain.constants import DEFAULT_APERTURE
from ...domain.entities import SpectralFactorization
from ...domain.exceptions import InvalidFunctionalError
from ...domain.value_objects import GridFunction, TimeGrid
from ..conegeo import TentGenerator, a_functional_field, build_tent_field


class SquareKind(Enum):
    VERTICAL = "vertical"
    """S_{L,k}: integrand (t^{2m} L)^k e^{-t^{2m} L} f, k >= 1"""

    LUSIN = "lusin"
    """S_{h,L,k}: integrand (t nabla)^m (t^{2m} L)^k e^{-t^{2m} L} f, k >= 0"""


def square_generator(kind: SquareKind, k: int) -> TentGenerator:
    if kind is SquareKind.VERTICAL:
        if k < 1:
            raise InvalidFunctionalError(f"vertical square function needs k >= 1, received k={k}")
        return TentGenerator.qk(k)
    if k < 0:
        raise InvalidFunctionalError(f"lusin square function needs k >= 0, received k={k}")
    return TentGenerator.gradient(k)


def square_function(
    fact: SpectralFactorization,
    f: GridFunction,
    kind: SquareKind,
    k: int,
    time_grid: TimeGrid,
    aperture: float = DEFAULT_APERTURE,
) -> GridFunction:
    """A-functional of the matching tent field at every site."""
    generator = square_generator(SquareKind(kind), k)
    field = build_tent_field(fact, f, generator, time_grid)
    return GridFunction(f.grid, a_functional_field(field, aperture))
