"""Riesz transform nabla^m L^{-1/2} and Kato square-root constants."""
from dataclasses import dataclass

import numpy as np
import structlog

from ...domain.entities import SpectralFactorization
from ...domain.value_objects import GridFunction
from ..elliptic import random_probe
from ..lattice import GradientBlock, gradient_block
from .matrix_function import invsqrt_apply, matrix_function
from .symbols import power_symbol

logger = structlog.get_logger(__name__)


def riesz_transform(fact: SpectralFactorization, f: GridFunction) -> GradientBlock:
    """{d^gamma L^{-1/2} f : |gamma| = m}; f must be mean-zero."""
    return gradient_block(invsqrt_apply(fact, f), fact.m)


def riesz_ratio(fact: SpectralFactorization, f: GridFunction) -> float:
    """||nabla^m L^{-1/2} f||_2 / ||f||_2"""
    block = riesz_transform(fact, f)
    return float(np.sqrt(block.energy()) / f.l2_norm())


@dataclass(frozen=True)
class KatoConstants:
    """
    Measured constants of c ||sqrt(L) f|| <= ||nabla^m f|| <= C ||sqrt(L) f||
    over mean-zero probes.
    """

    lower: float
    upper: float
    probes: int
    seed: int

    @property
    def finite(self) -> bool:
        return bool(np.isfinite(self.lower) and np.isfinite(self.upper) and self.lower > 0)

    def to_dict(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "probes": self.probes,
            "seed": self.seed,
            "finite": self.finite,
        }


def kato_constants(fact: SpectralFactorization, probes: int = 50, seed: int = 0) -> KatoConstants:
    """lower = min and upper = max of ||nabla^m f|| / ||sqrt(L) f||."""
    grid = fact.source.grid
    rng = np.random.default_rng(seed)
    sqrt_l = matrix_function(fact, power_symbol(0.5))
    ratios = []
    for _ in range(probes):
        probe = random_probe(grid, rng)
        root = sqrt_l(probe).l2_norm()
        ratios.append(np.sqrt(gradient_block(probe, fact.m).energy()) / root)
    constants = KatoConstants(float(np.min(ratios)), float(np.max(ratios)), probes, seed)
    logger.info("kato_constants_measured", **constants.to_dict())
    return constants
