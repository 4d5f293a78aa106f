"""Named functionals used by the equivalence and domination studies."""
from dataclasses import dataclass
from typing import Callable, Dict, Optional

import numpy as np

from ...domain.constants import DEFAULT_APERTURE
from ...domain.entities import CutoffDescriptor, SpectralFactorization
from ...domain.exceptions import InvalidFunctionalError
from ...domain.value_objects import GridFunction, TimeGrid
from ..lattice import lp_quasinorm
from .cutoff import make_cutoff_descriptor
from .maximal import MaximalKind, maximal_function
from .square import SquareKind, square_function

Evaluator = Callable[[SpectralFactorization, GridFunction, TimeGrid, float, Optional[CutoffDescriptor]], GridFunction]


def _square(kind: SquareKind, k: int) -> Evaluator:
    def evaluate(fact, f, time_grid, aperture, cutoff):
        return square_function(fact, f, kind, k, time_grid, aperture)
    return evaluate


def _maximal(kind: MaximalKind) -> Evaluator:
    def evaluate(fact, f, time_grid, aperture, cutoff):
        if kind is MaximalKind.CUTOFF and cutoff is None:
            cutoff = make_cutoff_descriptor(fact.m)
        return maximal_function(fact, f, kind, time_grid, aperture, cutoff)
    return evaluate


def _identity(fact, f, time_grid, aperture, cutoff):
    return GridFunction(f.grid, np.abs(f.values))


_EVALUATORS: Dict[str, Evaluator] = {
    "S_L": _square(SquareKind.VERTICAL, 1),
    "S_L_k2": _square(SquareKind.VERTICAL, 2),
    "S_hL": _square(SquareKind.LUSIN, 0),
    "S_hL_k1": _square(SquareKind.LUSIN, 1),
    "N_hL": _maximal(MaximalKind.NONTANGENTIAL),
    "R_hL": _maximal(MaximalKind.RADIAL),
    "N_tilde_hL": _maximal(MaximalKind.NONTANGENTIAL_GRAD),
    "R_tilde_hL": _maximal(MaximalKind.RADIAL_GRAD),
    "N_psi_hL": _maximal(MaximalKind.CUTOFF),
    "identity": _identity,
}


@dataclass(frozen=True)
class FunctionalSpec:
    """A registered functional with its aperture and a scalar multiplier."""

    name: str
    aperture: float = DEFAULT_APERTURE
    scale: float = 1.0

    def __post_init__(self):
        if self.name not in _EVALUATORS:
            raise InvalidFunctionalError(
                f"unknown functional '{self.name}', expected one of {sorted(_EVALUATORS)}"
            )
        if not self.aperture > 0:
            raise InvalidFunctionalError(f"aperture must be positive, received {self.aperture}")
        if not self.scale > 0:
            raise InvalidFunctionalError(f"scale must be positive, received {self.scale}")

    @property
    def label(self) -> str:
        label = self.name if self.aperture == DEFAULT_APERTURE else f"{self.name}^{self.aperture:g}"
        return label if self.scale == 1.0 else f"{self.scale:g}*{label}"

    def evaluate(
        self,
        fact: SpectralFactorization,
        f: GridFunction,
        time_grid: TimeGrid,
        cutoff: Optional[CutoffDescriptor] = None,
    ) -> GridFunction:
        values = _EVALUATORS[self.name](fact, f, time_grid, self.aperture, cutoff)
        return values if self.scale == 1.0 else values * self.scale

    def norm(
        self,
        fact: SpectralFactorization,
        f: GridFunction,
        p: float,
        time_grid: TimeGrid,
        cutoff: Optional[CutoffDescriptor] = None,
    ) -> float:
        return lp_quasinorm(self.evaluate(fact, f, time_grid, cutoff), p)


def registered_functionals() -> tuple:
    return tuple(sorted(_EVALUATORS))


def resolve_functional(name: str, aperture: Optional[float] = None, scale: float = 1.0) -> FunctionalSpec:
    """FunctionalSpec for a registered name; raises InvalidFunctionalError."""
    return FunctionalSpec(name, DEFAULT_APERTURE if aperture is None else aperture, scale)
