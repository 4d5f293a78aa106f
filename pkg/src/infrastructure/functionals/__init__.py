"""Square and maximal functionals evaluated sitewise on the lattice."""
from .cutoff import localized_cutoff, make_cutoff_descriptor
from .square import SquareKind, square_function, square_generator
from .maximal import MaximalKind, maximal_function
from .registry import FunctionalSpec, registered_functionals, resolve_functional
from .poincare import poincare_bound, poincare_check

__all__ = [
    'localized_cutoff',
    'make_cutoff_descriptor',
    'SquareKind',
    'square_function',
    'square_generator',
    'MaximalKind',
    'maximal_function',
    'FunctionalSpec',
    'registered_functionals',
    'resolve_functional',
    'poincare_bound',
    'poincare_check',
]
