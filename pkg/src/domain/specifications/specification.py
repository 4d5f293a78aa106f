"""Patrón Specification: precondiciones numéricas combinables."""
from abc import ABC, abstractmethod
from typing import Generic, List, TypeVar

T = TypeVar('T')


class Specification(ABC, Generic[T]):
    """
    Predicado sobre funciones de malla u operadores.

    Cada especificación hoja tiene un ``reason`` corto que se usa en los
    eventos de log cuando un miembro de familia se descarta. Las
    composiciones (``&``, ``|``, ``~``) acumulan las razones de sus hojas.

    Example:
        >>> member = FiniteSpecification() & NonZeroSpecification() & MeanZeroSpecification()
        >>> member.failures(f)
        ['not mean-zero']
    """

    reason: str = "predicate failed"

    @abstractmethod
    def is_satisfied_by(self, candidate: T) -> bool:
        pass

    def failures(self, candidate: T) -> List[str]:
        """Razones de las hojas que no se cumplen (vacía si se cumple)."""
        return [] if self.is_satisfied_by(candidate) else [self.reason]

    def __and__(self, other: 'Specification[T]') -> 'Specification[T]':
        return AndSpecification(self, other)

    def __or__(self, other: 'Specification[T]') -> 'Specification[T]':
        return OrSpecification(self, other)

    def __invert__(self) -> 'Specification[T]':
        return NotSpecification(self)


class AndSpecification(Specification[T]):
    """Se cumple si se cumplen ambas; reporta las fallas de cada lado."""

    def __init__(self, left: Specification[T], right: Specification[T]):
        self.left = left
        self.right = right

    def is_satisfied_by(self, candidate: T) -> bool:
        return self.left.is_satisfied_by(candidate) and self.right.is_satisfied_by(candidate)

    def failures(self, candidate: T) -> List[str]:
        return self.left.failures(candidate) + self.right.failures(candidate)

    def __repr__(self) -> str:
        return f"({self.left!r} & {self.right!r})"


class OrSpecification(Specification[T]):

    def __init__(self, left: Specification[T], right: Specification[T]):
        self.left = left
        self.right = right

    def is_satisfied_by(self, candidate: T) -> bool:
        return self.left.is_satisfied_by(candidate) or self.right.is_satisfied_by(candidate)

    def failures(self, candidate: T) -> List[str]:
        if self.is_satisfied_by(candidate):
            return []
        return self.left.failures(candidate) + self.right.failures(candidate)

    def __repr__(self) -> str:
        return f"({self.left!r} | {self.right!r})"


class NotSpecification(Specification[T]):

    def __init__(self, spec: Specification[T]):
        self.spec = spec
        self.reason = f"not ({spec.reason})"

    def is_satisfied_by(self, candidate: T) -> bool:
        return not self.spec.is_satisfied_by(candidate)

    def __repr__(self) -> str:
        return f"~{self.spec!r}"
