"""Periodic lattice: grids, spectral calculus, norms, balls and maximal functions."""
from .grid import make_grid
from .spectral import (
    GradientBlock,
    derivative_symbol,
    differentiate_columns,
    fourier_coefficients,
    gradient_block,
    gradient_magnitude,
    integer_frequencies,
    partial_derivative,
)
from .norms import lp_quasinorm, lp_quasinorm_values
from .balls import (
    annulus_indices,
    ball_indices,
    ball_maxima,
    ball_measure,
    ball_offsets,
    ball_sums,
    is_clamped,
    max_faithful_ring,
    neighbour_table,
    torus_distance,
)
from .maximal import hardy_littlewood_maximal

__all__ = [
    'make_grid',
    'GradientBlock',
    'derivative_symbol',
    'differentiate_columns',
    'fourier_coefficients',
    'gradient_block',
    'gradient_magnitude',
    'integer_frequencies',
    'partial_derivative',
    'lp_quasinorm',
    'lp_quasinorm_values',
    'annulus_indices',
    'ball_indices',
    'ball_maxima',
    'ball_measure',
    'ball_offsets',
    'ball_sums',
    'is_clamped',
    'max_faithful_ring',
    'neighbour_table',
    'torus_distance',
    'hardy_littlewood_maximal',
]
