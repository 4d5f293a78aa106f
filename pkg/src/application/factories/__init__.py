"""Factories that build study inputs (operators, time grids, function families) from configuration."""
from .operator_factory import (
    StudyContext,
    create_context,
    create_grid,
    create_operator,
    create_reference_factorization,
    create_time_grid,
    refined_config,
)
from .function_family_factory import (
    build_family,
    create_function_family,
    default_descriptors,
    fourier_mode,
    gaussian_bump,
    random_bandlimited,
    realize_member,
    smoothed_indicator,
)

__all__ = [
    'StudyContext',
    'create_context',
    'create_grid',
    'create_operator',
    'create_reference_factorization',
    'create_time_grid',
    'refined_config',
    'build_family',
    'create_function_family',
    'default_descriptors',
    'fourier_mode',
    'gaussian_bump',
    'random_bandlimited',
    'realize_member',
    'smoothed_indicator',
]
