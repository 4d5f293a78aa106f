"""Especificaciones sobre funciones de malla y operadores."""
from typing import TYPE_CHECKING

import numpy as np

from ..constants import MEAN_ZERO_TOLERANCE
from .specification import AndSpecification, Specification

if TYPE_CHECKING:
    from ..entities import EllipticOperator
    from ..value_objects import GridFunction


class FiniteSpecification(Specification['GridFunction']):
    """Todas las muestras son finitas."""

    reason = "non-finite samples"

    def is_satisfied_by(self, f: 'GridFunction') -> bool:
        return bool(np.all(np.isfinite(f.values)))

    def __repr__(self) -> str:
        return "FiniteSpecification()"


class MeanZeroSpecification(Specification['GridFunction']):
    """
    La media de f es nula relativa a sup|f|.

    Sobre el toro las constantes forman el núcleo de L, así que las
    potencias negativas y la representación molecular sólo viven en el
    complemento de media cero.
    """

    reason = "not mean-zero"

    def __init__(self, tolerance: float = MEAN_ZERO_TOLERANCE):
        self.tolerance = tolerance

    def is_satisfied_by(self, f: 'GridFunction') -> bool:
        return f.is_mean_zero(self.tolerance)

    def __repr__(self) -> str:
        return f"MeanZeroSpecification(tolerance={self.tolerance})"


class NonZeroSpecification(Specification['GridFunction']):
    """f no es idénticamente nula."""

    reason = "identically zero"

    def __init__(self, tolerance: float = 0.0):
        self.tolerance = tolerance

    def is_satisfied_by(self, f: 'GridFunction') -> bool:
        return not f.is_zero(self.tolerance)

    def __repr__(self) -> str:
        return f"NonZeroSpecification(tolerance={self.tolerance})"


class SectorialSpecification(Specification['EllipticOperator']):
    """El operador tiene constantes de forma positivas, es decir omega < pi/2."""

    reason = "form estimate not elliptic"

    def is_satisfied_by(self, op: 'EllipticOperator') -> bool:
        return op.form_estimate.is_elliptic

    def __repr__(self) -> str:
        return "SectorialSpecification()"


class StudyMemberSpecification(AndSpecification['GridFunction']):
    """Miembro admisible de una familia: finito, no nulo y de media cero."""

    def __init__(self, tolerance: float = MEAN_ZERO_TOLERANCE, zero_tolerance: float = 0.0):
        super().__init__(
            FiniteSpecification() & NonZeroSpecification(zero_tolerance),
            MeanZeroSpecification(tolerance),
        )
