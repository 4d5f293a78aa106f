"""Entidad para el perfil de corte suave psi de los maximales con corte."""
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..constants import CUTOFF_INNER_RADIUS, CUTOFF_OUTER_RADIUS


def _flat_exp(s: np.ndarray) -> np.ndarray:
    """phi(s) = exp(-1/s) para s > 0, 0 en otro caso (C^infinito)."""
    s = np.asarray(s, dtype=float)
    out = np.zeros_like(s)
    pos = s > 0
    out[pos] = np.exp(-1.0 / s[pos])
    return out


@dataclass(frozen=True)
class CutoffDescriptor:
    """
    Perfil radial: 1 en [0, inner], 0 en [outer, inf), transición C^infinito
    phi(outer - s) / (phi(outer - s) + phi(s - inner)) con phi(s) = exp(-1/s).

    derivative_bounds[k] = sup |d^k profile / ds^k| para k = 0..m.
    """

    derivative_bounds: Tuple[float, ...]
    inner: float = CUTOFF_INNER_RADIUS
    outer: float = CUTOFF_OUTER_RADIUS

    def __post_init__(self):
        if not 0 < self.inner < self.outer:
            raise ValueError(f"Cutoff radii must satisfy 0 < inner < outer: {self.inner}, {self.outer}")
        if not all(np.isfinite(b) for b in self.derivative_bounds):
            raise ValueError("Cutoff derivative bounds must be finite")

    @property
    def order(self) -> int:
        return len(self.derivative_bounds) - 1

    def profile(self, s: np.ndarray) -> np.ndarray:
        s = np.abs(np.asarray(s, dtype=float))
        up = _flat_exp(self.outer - s)
        down = _flat_exp(s - self.inner)
        return up / (up + down)

    def to_dict(self) -> dict:
        return {
            "inner": self.inner,
            "outer": self.outer,
            "derivative_bounds": list(self.derivative_bounds),
        }
