"""Entidades para moléculas (p, 2, M, epsilon)_L y representaciones moleculares."""
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np

from ..constants import MOLECULE_BOUND_TOLERANCE
from ..exceptions import ShapeMismatchError
from ..value_objects import Ball, GridFunction


@dataclass(frozen=True, eq=False)
class Molecule:
    """
    Molécula verificada alpha = (r_B^{2m} L)^M b con su testigo b.

    achieved_bounds[l, i] = ||(r_B^{2m}L)^{-l} alpha||_{L2(S_i(B))}
                            / (2^{-i eps} |2^i B|^{1/2 - 1/p})
    para l = 0..M e i = 0..max_ring.
    """

    sample: GridFunction
    ball: Ball
    p: float
    M: int
    epsilon: float
    witness: GridFunction
    achieved_bounds: np.ndarray
    normalization: float = 1.0
    seed: Optional[int] = None

    def __post_init__(self):
        arr = np.array(self.achieved_bounds, dtype=float, copy=True)
        if arr.ndim != 2 or arr.shape[0] != self.M + 1:
            raise ShapeMismatchError(f"({self.M + 1}, rings)", arr.shape)
        arr.setflags(write=False)
        object.__setattr__(self, "achieved_bounds", arr)

    @property
    def max_ring(self) -> int:
        return self.achieved_bounds.shape[1] - 1

    @property
    def worst_bound(self) -> float:
        return float(np.max(self.achieved_bounds))

    @property
    def is_verified(self) -> bool:
        return self.worst_bound <= 1.0 + MOLECULE_BOUND_TOLERANCE

    def to_dict(self) -> dict:
        return {
            "ball": self.ball.to_dict(),
            "p": self.p,
            "M": self.M,
            "epsilon": self.epsilon,
            "seed": self.seed,
            "normalization": self.normalization,
            "max_ring": self.max_ring,
            "worst_bound": self.worst_bound,
            "verified": self.is_verified,
            "achieved_bounds": self.achieved_bounds.tolist(),
        }


@dataclass
class MolecularRepresentation:
    """
    Representación f = sum_j lambda_j alpha_j con su p-suma.

    Sólo se calcula la p-suma de esta representación dada, no el ínfimo
    sobre todas las representaciones.
    """

    molecules: List[Molecule]
    coefficients: Sequence[complex]
    p: float
    target: Optional[GridFunction] = None
    notes: List[str] = field(default_factory=list)

    def __post_init__(self):
        if len(self.molecules) != len(self.coefficients):
            raise ShapeMismatchError(len(self.molecules), len(self.coefficients))
        if not self.molecules:
            raise ValueError("A molecular representation needs at least one molecule")

    @property
    def p_sum(self) -> float:
        """sum_j |lambda_j|^p"""
        return float(np.sum(np.abs(np.asarray(self.coefficients, dtype=complex)) ** self.p))

    def reconstruct(self) -> GridFunction:
        grid = self.molecules[0].sample.grid
        total = np.zeros(grid.shape, dtype=np.complex128)
        for coeff, molecule in zip(self.coefficients, self.molecules):
            total = total + coeff * molecule.sample.values
        return GridFunction(grid, total)

    def reconstruction_error(self, target: Optional[GridFunction] = None) -> float:
        """||sum lambda_j alpha_j - target||_2 / ||target||_2 (absoluto si target = 0)."""
        reference = target if target is not None else self.target
        if reference is None:
            raise ValueError("No target available for reconstruction error")
        diff = (self.reconstruct() - reference).l2_norm()
        scale = reference.l2_norm()
        return diff / scale if scale > 0 else diff

    @property
    def all_verified(self) -> bool:
        return all(m.is_verified for m in self.molecules)
