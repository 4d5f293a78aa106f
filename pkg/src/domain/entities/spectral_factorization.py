"""Entidad de dominio para la factorización reutilizable de L."""
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .elliptic_operator import EllipticOperator


@dataclass(frozen=True)
class SpectralBlock:
    """Bloque diagonal [start, stop) de T con autovalores agrupados."""

    start: int
    stop: int
    center: complex
    """Media de los autovalores del bloque (centro de la serie de Taylor)"""

    is_kernel: bool = False

    @property
    def size(self) -> int:
        return self.stop - self.start


@dataclass(frozen=True, eq=False)
class SpectralFactorization:
    """
    L = Z T Z* con Z unitaria y T triangular superior, reordenada por clusters.

    Además guarda la separación en bloques de T: con S triangular por bloques
    (T = S diag(T_JJ) S^{-1}) se precalculan W = Z S y V = S^{-1} Z*, de modo
    que g(L) = W diag(g(T_JJ)) V.
    """

    source: EllipticOperator
    triangular_factor: np.ndarray
    similarity: np.ndarray
    residual: float
    kernel_dimension: int
    blocks: Tuple[SpectralBlock, ...]
    left_basis: np.ndarray
    """W = Z S"""

    right_basis: np.ndarray
    """V = S^{-1} Z*"""

    unitarity_defect: float = 0.0

    def __post_init__(self):
        for name in ("triangular_factor", "similarity", "left_basis", "right_basis"):
            arr = np.array(getattr(self, name), dtype=np.complex128, copy=True)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @property
    def eigenvalues(self) -> np.ndarray:
        return np.diag(self.triangular_factor).copy()

    @property
    def m(self) -> int:
        return self.source.m

    @property
    def kernel_block(self) -> Optional[SpectralBlock]:
        for block in self.blocks:
            if block.is_kernel:
                return block
        return None

    def summary(self) -> dict:
        return {
            "residual": self.residual,
            "unitarity_defect": self.unitarity_defect,
            "kernel_dimension": self.kernel_dimension,
            "block_count": len(self.blocks),
            "max_block_size": max(b.size for b in self.blocks),
        }
