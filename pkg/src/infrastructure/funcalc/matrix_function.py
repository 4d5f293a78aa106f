"""Matrix functions g(L) on top of a SpectralFactorization."""
from concurrent.futures import ThreadPoolExecutor
from typing import List, Sequence, Tuple, Union

import numpy as np
import structlog

from ...domain.constants import MAX_TAYLOR_TERMS, MEAN_ZERO_TOLERANCE
from ...domain.entities import SpectralBlock, SpectralFactorization
from ...domain.exceptions import InvalidSpectralArgumentError, KernelObstructionError
from ...domain.ports import SpectralSymbolPort
from ...domain.specifications import MeanZeroSpecification
from ...domain.value_objects import GridFunction
from .symbols import power_symbol, qk_symbol, resolvent_symbol, semigroup_symbol

logger = structlog.get_logger(__name__)

_SERIES_STALL = 3


def block_function(symbol: SpectralSymbolPort, block: SpectralBlock, diagonal_block: np.ndarray) -> np.ndarray:
    """
    g(T_JJ) for one decoupled block.

    Kernel blocks get g(0) I. Other blocks are expanded in Taylor series
    around their eigenvalue mean; clustering keeps T_JJ - center I close to
    nilpotent, so the series stops once successive terms are negligible.
    """
    size = block.size
    identity = np.eye(size, dtype=np.complex128)
    if block.is_kernel:
        return symbol.kernel_value() * identity
    if size == 1:
        return symbol.evaluate(diagonal_block.reshape(1)).reshape(1, 1)

    shifted = diagonal_block - block.center * identity
    coeffs = symbol.taylor_coefficients(block.center, MAX_TAYLOR_TERMS)
    result = coeffs[0] * identity
    power = identity
    quiet = 0
    for k in range(1, MAX_TAYLOR_TERMS):
        power = power @ shifted
        term = coeffs[k] * power
        result = result + term
        if np.linalg.norm(term) <= np.finfo(float).eps * np.linalg.norm(result):
            quiet += 1
            if quiet >= _SERIES_STALL:
                break
        else:
            quiet = 0
    return result


class MatrixFunctionApplier:
    """
    g(L) = W diag(g(T_JJ)) V with the bases of the factorization.

    Pure after construction, so one applier can be shared across threads.
    """

    def __init__(self, fact: SpectralFactorization, symbol: SpectralSymbolPort):
        self.fact = fact
        self.symbol = symbol
        T = fact.triangular_factor
        scalar: List[Tuple[int, complex]] = []
        self._dense_blocks: List[Tuple[int, int, np.ndarray]] = []
        for block in fact.blocks:
            values = block_function(symbol, block, T[block.start:block.stop, block.start:block.stop])
            if block.size == 1:
                scalar.append((block.start, complex(values[0, 0])))
            else:
                self._dense_blocks.append((block.start, block.stop, values))
        self._scalar_index = np.array([i for i, _ in scalar], dtype=int)
        self._scalar_values = np.array([v for _, v in scalar], dtype=np.complex128)

    def _middle(self, coords: np.ndarray) -> np.ndarray:
        out = np.zeros_like(coords)
        out[self._scalar_index] = self._scalar_values.reshape((-1,) + (1,) * (coords.ndim - 1)) * coords[self._scalar_index]
        for start, stop, values in self._dense_blocks:
            out[start:stop] = values @ coords[start:stop]
        return out

    def apply_values(self, values: np.ndarray) -> np.ndarray:
        """g(L) on a flat vector, or on the columns of a (P, K) array."""
        coords = self.fact.right_basis @ np.asarray(values, dtype=np.complex128)
        return self.fact.left_basis @ self._middle(coords)

    def __call__(self, f: GridFunction) -> GridFunction:
        return GridFunction(f.grid, self.apply_values(f.flat))

    def dense(self) -> np.ndarray:
        """Explicit matrix g(L)."""
        return self.fact.left_basis @ self._middle(np.array(self.fact.right_basis))

    def batch(self, functions: Sequence[GridFunction], max_workers: int = 1) -> List[GridFunction]:
        """Apply to many inputs, in input order."""
        if max_workers <= 1:
            if not functions:
                return []
            grid = functions[0].grid
            columns = self.apply_values(np.stack([f.flat for f in functions], axis=1))
            return [GridFunction(grid, columns[:, i]) for i in range(len(functions))]
        with ThreadPoolExecutor(max_workers=max_workers) as executor:
            return list(executor.map(self, functions))


def matrix_function(fact: SpectralFactorization, symbol: SpectralSymbolPort) -> MatrixFunctionApplier:
    return MatrixFunctionApplier(fact, symbol)


# ----------------------------------------------------------------------------
# named appliers
# ----------------------------------------------------------------------------

def _require_positive_time(t: float) -> None:
    if not np.isfinite(t) or t <= 0:
        raise InvalidSpectralArgumentError("t", t, "semigroup time must be > 0")


def semigroup_apply(fact: SpectralFactorization, t: float, f: GridFunction) -> GridFunction:
    """e^{-tL} f"""
    _require_positive_time(t)
    return matrix_function(fact, semigroup_symbol(t))(f)


def qk_apply(fact: SpectralFactorization, k: int, t: float, f: GridFunction) -> GridFunction:
    """(t^{2m} L)^k e^{-t^{2m} L} f"""
    _require_positive_time(t)
    if k < 0 or int(k) != k:
        raise InvalidSpectralArgumentError("k", k, "power must be a non-negative integer")
    return matrix_function(fact, qk_symbol(int(k), t ** (2 * fact.m)))(f)


def resolvent_apply(fact: SpectralFactorization, lam: complex, f: GridFunction) -> GridFunction:
    """(lam I + L)^{-1} f"""
    if not np.real(lam) > 0:
        raise InvalidSpectralArgumentError("lambda", lam, "resolvent requires Re(lambda) > 0")
    return matrix_function(fact, resolvent_symbol(lam))(f)


def sqrt_apply(fact: SpectralFactorization, f: GridFunction) -> GridFunction:
    """L^{1/2} f (principal branch, zero on constants)"""
    return matrix_function(fact, power_symbol(0.5))(f)


def invsqrt_apply(fact: SpectralFactorization, f: GridFunction) -> GridFunction:
    """
    L^{-1/2} f on the mean-zero complement.

    Raises:
        KernelObstructionError: if f has a non-negligible mean
    """
    if not MeanZeroSpecification(MEAN_ZERO_TOLERANCE).is_satisfied_by(f):
        raise KernelObstructionError("invsqrt_apply", f.mean())
    return matrix_function(fact, power_symbol(-0.5))(f)


def apply_symbol(fact: SpectralFactorization, symbol: SpectralSymbolPort, f: Union[GridFunction, np.ndarray]):
    """One-off application of an arbitrary symbol."""
    applier = matrix_function(fact, symbol)
    if isinstance(f, GridFunction):
        return applier(f)
    return applier.apply_values(f)
