"""Value Object para la malla geométrica de tiempos."""
from dataclasses import dataclass
import math

import numpy as np

from ..constants import MIN_TIME_LEVELS
from ..exceptions import InvalidTimeGridError


@dataclass(frozen=True)
class TimeGrid:
    """
    Muestras geométricas t_j = t_min * rho^j, j = 0..J-1, con t_{J-1} = t_max.

    El peso Delta = ln(rho) es la regla del punto medio en escala logarítmica
    para integrales en dt/t.

    **Reglas de negocio:**
    - 0 < t_min < t_max
    - levels >= 8

    Example:
        >>> tg = TimeGrid(0.01, 1.0, 9)
        >>> round(tg.ratio ** 8, 10)
        100.0
    """

    t_min: float
    t_max: float
    levels: int

    def __post_init__(self):
        if not (isinstance(self.levels, int) and not isinstance(self.levels, bool)):
            raise InvalidTimeGridError("levels must be an integer", levels=self.levels)
        if self.levels < MIN_TIME_LEVELS:
            raise InvalidTimeGridError(
                f"levels must be >= {MIN_TIME_LEVELS}", levels=self.levels
            )
        if not (math.isfinite(self.t_min) and math.isfinite(self.t_max)):
            raise InvalidTimeGridError("bounds must be finite", t_min=self.t_min, t_max=self.t_max)
        if self.t_min <= 0:
            raise InvalidTimeGridError("t_min must be positive", t_min=self.t_min)
        if self.t_min >= self.t_max:
            raise InvalidTimeGridError(
                "bounds inverted, need t_min < t_max", t_min=self.t_min, t_max=self.t_max
            )

    @property
    def ratio(self) -> float:
        """rho = (t_max/t_min)^{1/(J-1)}"""
        return (self.t_max / self.t_min) ** (1.0 / (self.levels - 1))

    @property
    def log_weight(self) -> float:
        """Delta = ln(rho)"""
        return math.log(self.t_max / self.t_min) / (self.levels - 1)

    @property
    def samples(self) -> np.ndarray:
        samples = self.t_min * self.ratio ** np.arange(self.levels)
        samples[0] = self.t_min
        samples[-1] = self.t_max
        return samples

    def refined(self) -> 'TimeGrid':
        """Misma ventana con el doble de niveles."""
        return TimeGrid(self.t_min, self.t_max, 2 * self.levels)

    def to_dict(self) -> dict:
        return {"t_min": self.t_min, "t_max": self.t_max, "levels": self.levels}
