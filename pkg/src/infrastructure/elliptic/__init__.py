"""Divergence-form operators of order 2m: coefficients, assembly, ellipticity."""
from .coefficients import (
    constant_coefficients,
    polyharmonic_coefficients,
    polyharmonic_weights,
    random_elliptic_coefficients,
    resample_coefficients,
)
from .ellipticity import (
    check_form_ellipticity,
    check_strong_ellipticity,
    hermitian_part_min_eigenvalue,
    operator_norm,
    random_probe,
    sector_violation,
    sesquilinear_form,
)
from .assembly import adjoint, assemble, assemble_matrix

__all__ = [
    'constant_coefficients',
    'polyharmonic_coefficients',
    'polyharmonic_weights',
    'random_elliptic_coefficients',
    'resample_coefficients',
    'check_form_ellipticity',
    'check_strong_ellipticity',
    'hermitian_part_min_eigenvalue',
    'operator_norm',
    'random_probe',
    'sector_violation',
    'sesquilinear_form',
    'adjoint',
    'assemble',
    'assemble_matrix',
]
