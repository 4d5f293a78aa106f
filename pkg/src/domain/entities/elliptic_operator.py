"""Entidades para operadores elípticos ensamblados y sus certificados."""
from dataclasses import dataclass
from functools import cached_property
import math
from typing import Optional, Tuple

import numpy as np

from ..exceptions import ShapeMismatchError
from ..value_objects import TorusGrid
from .coefficient_field import CoefficientField


@dataclass(frozen=True)
class FormEstimate:
    """
    Constantes de elipticidad de forma medidas por sondeo aleatorio.

    lambda0_hat <= 0 no lanza excepción: se reporta como falla de elipticidad.
    """

    lambda0_hat: float
    Lambda0_hat: float
    trials: int
    seed: int

    @property
    def is_elliptic(self) -> bool:
        return self.lambda0_hat > 0 and self.lambda0_hat <= self.Lambda0_hat

    def to_dict(self) -> dict:
        return {
            "lambda0_hat": self.lambda0_hat,
            "Lambda0_hat": self.Lambda0_hat,
            "trials": self.trials,
            "seed": self.seed,
            "is_elliptic": self.is_elliptic,
        }


@dataclass(frozen=True)
class EllipticityCertificate:
    """Resultado del escaneo puntual de elipticidad fuerte: lambda1 o el sitio peor."""

    lambda1: float
    """Mínimo sobre sitios del menor autovalor de la parte hermitiana"""

    worst_site: Tuple[int, ...]
    """Sitio donde se alcanza el mínimo"""

    @property
    def certified(self) -> bool:
        return self.lambda1 > 0

    def to_dict(self) -> dict:
        return {
            "lambda1": self.lambda1,
            "certified": self.certified,
            "worst_site": list(self.worst_site),
        }


@dataclass(frozen=True, eq=False)
class EllipticOperator:
    """
    Operador L = sum (-1)^m d^alpha (a_{alpha,beta} d^beta) ensamblado en forma densa.

    Inmutable; la matriz se marca como solo lectura. Los metadatos de
    elipticidad (lambda0, Lambda0, lambda1, omega) vienen de los validadores.
    """

    coefficients: CoefficientField
    matrix: np.ndarray
    form_estimate: FormEstimate
    certificate: EllipticityCertificate

    def __post_init__(self):
        arr = np.array(self.matrix, dtype=np.complex128, copy=True)
        p = self.coefficients.grid.total_points
        if arr.shape != (p, p):
            raise ShapeMismatchError((p, p), arr.shape)
        arr.setflags(write=False)
        object.__setattr__(self, "matrix", arr)

    @property
    def m(self) -> int:
        return self.coefficients.m

    @property
    def grid(self) -> TorusGrid:
        return self.coefficients.grid

    @property
    def garding_lower(self) -> float:
        return self.form_estimate.lambda0_hat

    @property
    def form_upper(self) -> float:
        return self.form_estimate.Lambda0_hat

    @property
    def pointwise_lower(self) -> Optional[float]:
        """lambda1 si la elipticidad fuerte está certificada, si no None."""
        return self.certificate.lambda1 if self.certificate.certified else None

    @property
    def type_angle(self) -> float:
        """omega = arctan(Lambda0/lambda0); pi/2 si lambda0 no es positivo."""
        if self.garding_lower <= 0:
            return math.pi / 2
        return math.atan(self.form_upper / self.garding_lower)

    @cached_property
    def norm(self) -> float:
        """Norma espectral ||L||_{2->2} (en la métrica euclídea de muestras)."""
        return float(np.linalg.norm(self.matrix, 2))

    def apply(self, values: np.ndarray) -> np.ndarray:
        """L aplicado a un vector plano (o matriz de columnas)."""
        return self.matrix @ values

    def metadata(self) -> dict:
        return {
            "m": self.m,
            "grid": self.grid.to_dict(),
            "lambda0_hat": self.garding_lower,
            "Lambda0_hat": self.form_upper,
            "lambda1": self.pointwise_lower,
            "type_angle": self.type_angle,
            "sup_bound": self.coefficients.sup_bound,
            "norm": self.norm,
        }
