"""
Brute-force e^{-tL} by scaling and squaring of the Taylor series.

Shares nothing with the factorization path; used only to cross-check it.
"""
from typing import Union

import numpy as np

from ...domain.exceptions import InvalidSpectralArgumentError
from ...domain.value_objects import GridFunction

_MAX_TERMS = 60


def _expm_taylor(A: np.ndarray) -> np.ndarray:
    norm = np.linalg.norm(A, 1)
    squarings = max(0, int(np.ceil(np.log2(norm))) + 1) if norm > 0 else 0
    B = A / (2.0 ** squarings)
    result = np.eye(len(A), dtype=np.complex128)
    term = np.eye(len(A), dtype=np.complex128)
    for k in range(1, _MAX_TERMS):
        term = term @ B / k
        result = result + term
        if np.linalg.norm(term, 1) <= np.finfo(float).eps * np.linalg.norm(result, 1):
            break
    for _ in range(squarings):
        result = result @ result
    return result


def expm_oracle(matrix: np.ndarray, t: float, f: Union[GridFunction, np.ndarray]):
    """e^{-t matrix} f; t = 0 returns f unchanged."""
    if t < 0:
        raise InvalidSpectralArgumentError("t", t, "oracle time must be >= 0")
    values = f.flat if isinstance(f, GridFunction) else np.asarray(f, dtype=np.complex128)
    if t == 0:
        out = np.array(values, dtype=np.complex128, copy=True)
    else:
        out = _expm_taylor(-t * np.asarray(matrix, dtype=np.complex128)) @ values
    if isinstance(f, GridFunction):
        return GridFunction(f.grid, out)
    return out
