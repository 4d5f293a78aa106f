"""Patrón Specification para precondiciones reutilizables."""
from .specification import Specification, AndSpecification, OrSpecification, NotSpecification
from .function_specifications import (
    FiniteSpecification,
    MeanZeroSpecification,
    NonZeroSpecification,
    SectorialSpecification,
    StudyMemberSpecification,
)

__all__ = [
    # Clase base
    'Specification',
    'AndSpecification',
    'OrSpecification',
    'NotSpecification',

    # Especificaciones concretas
    'FiniteSpecification',
    'MeanZeroSpecification',
    'NonZeroSpecification',
    'SectorialSpecification',

    # Especificaciones compuestas
    'StudyMemberSpecification',
]
