"""Holomorphic functional calculus for assembled operators."""
from .symbols import (
    ExpFactor,
    PowerFactor,
    SpectralSymbol,
    calderon_symbol,
    power_symbol,
    qk_symbol,
    resolvent_symbol,
    semigroup_symbol,
)
from .factorization import cluster_labels, factorize
from .matrix_function import (
    MatrixFunctionApplier,
    apply_symbol,
    invsqrt_apply,
    matrix_function,
    qk_apply,
    resolvent_apply,
    semigroup_apply,
    sqrt_apply,
)
from .oracle import expm_oracle
from .psi import (
    certify,
    membership_certificate,
    power_exp_psi,
    power_ratio_psi,
    psi_calculus,
    psi_norm_profile,
)
from .riesz import KatoConstants, kato_constants, riesz_ratio, riesz_transform

__all__ = [
    'ExpFactor',
    'PowerFactor',
    'SpectralSymbol',
    'calderon_symbol',
    'power_symbol',
    'qk_symbol',
    'resolvent_symbol',
    'semigroup_symbol',
    'cluster_labels',
    'factorize',
    'MatrixFunctionApplier',
    'apply_symbol',
    'invsqrt_apply',
    'matrix_function',
    'qk_apply',
    'resolvent_apply',
    'semigroup_apply',
    'sqrt_apply',
    'expm_oracle',
    'certify',
    'membership_certificate',
    'power_exp_psi',
    'power_ratio_psi',
    'psi_calculus',
    'psi_norm_profile',
    'KatoConstants',
    'kato_constants',
    'riesz_ratio',
    'riesz_transform',
]
