"""Value Object para multi-índices."""
from dataclasses import dataclass
from itertools import product
from math import factorial, prod
from typing import Tuple


@dataclass(frozen=True, order=True)
class MultiIndex:
    """
    Multi-índice alpha = (alpha_1, ..., alpha_n) con orden |alpha| = suma.

    El orden total (order=True) es lexicográfico sobre las componentes, que
    fija el orden de las filas/columnas del tensor de coeficientes.

    Example:
        >>> MultiIndex((1, 2)).order
        3
        >>> [a.components for a in MultiIndex.of_order(2, 1)]
        [(0, 1), (1, 0)]
    """

    components: Tuple[int, ...]

    def __post_init__(self):
        comps = tuple(self.components)
        if any((not isinstance(c, int)) or isinstance(c, bool) or c < 0 for c in comps):
            raise ValueError(f"Multi-index components must be non-negative integers: {comps}")
        object.__setattr__(self, "components", comps)

    @property
    def order(self) -> int:
        return sum(self.components)

    @property
    def dimension(self) -> int:
        return len(self.components)

    @property
    def factorial(self) -> int:
        """alpha! = alpha_1! ... alpha_n!"""
        return prod(factorial(c) for c in self.components)

    def __add__(self, other: 'MultiIndex') -> 'MultiIndex':
        if self.dimension != other.dimension:
            raise ValueError(
                f"Cannot add multi-indices of dimensions {self.dimension} and {other.dimension}"
            )
        return MultiIndex(tuple(a + b for a, b in zip(self.components, other.components)))

    @classmethod
    def of_order(cls, n: int, k: int) -> Tuple['MultiIndex', ...]:
        """Todos los multi-índices de dimensión n y orden k, en orden lexicográfico."""
        if k < 0:
            raise ValueError(f"Order must be >= 0, received: {k}")
        found = [c for c in product(range(k + 1), repeat=n) if sum(c) == k]
        return tuple(cls(c) for c in sorted(found))

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.components) + ")"
