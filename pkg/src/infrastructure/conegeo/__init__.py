"""Parabolic cones, time grids, tent fields and tent-space quasi-norms."""
from .cones import build_cone_sampling, default_time_grid, make_time_grid
from .tents import (
    GeneratorKind,
    TentGenerator,
    a_functional,
    a_functional_field,
    build_tent_field,
    heat_levels,
    tent_energy_profile,
    tent_quasinorm,
)

__all__ = [
    'build_cone_sampling',
    'default_time_grid',
    'make_time_grid',
    'GeneratorKind',
    'TentGenerator',
    'a_functional',
    'a_functional_field',
    'build_tent_field',
    'heat_levels',
    'tent_energy_profile',
    'tent_quasinorm',
]
