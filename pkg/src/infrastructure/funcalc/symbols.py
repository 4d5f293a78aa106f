"""Closed-form spectral symbols.

A symbol is coefficient * prod(factors) where each factor is either
(shift + scale*z)^exponent (principal branch) or exp(-s*z). Both have
Taylor coefficients in closed form, which is all the block evaluation in
the matrix-function applier needs.
"""
from dataclasses import dataclass, replace
from typing import Tuple, Union

import numpy as np
from scipy.special import binom

from ...domain.ports import SpectralSymbolPort


@dataclass(frozen=True)
class PowerFactor:
    """(shift + scale*z)^exponent"""

    shift: complex = 0.0
    scale: complex = 1.0
    exponent: float = 1.0

    def evaluate(self, z: np.ndarray) -> np.ndarray:
        base = self.shift + self.scale * np.asarray(z, dtype=np.complex128)
        if float(self.exponent).is_integer() and self.exponent >= 0:
            return base ** int(self.exponent)
        return np.power(base, self.exponent)

    def taylor_coefficients(self, center: complex, terms: int) -> np.ndarray:
        w = self.shift + self.scale * center
        k = np.arange(terms)
        if w == 0:
            # entire only for non-negative integer exponents
            if not (float(self.exponent).is_integer() and self.exponent >= 0):
                raise ValueError(f"Power factor is singular at the expansion point {center}")
            coeffs = np.zeros(terms, dtype=np.complex128)
            e = int(self.exponent)
            if e < terms:
                coeffs[e] = self.scale ** e
            return coeffs
        head = np.power(w, self.exponent) if not float(self.exponent).is_integer() else w ** int(self.exponent)
        return head * binom(self.exponent, k) * (self.scale / w) ** k

    def limit_at_zero(self) -> complex:
        if self.shift != 0:
            return complex(np.power(complex(self.shift), self.exponent))
        return 1.0 if self.exponent == 0 else 0.0

    def rescaled(self, tau: float) -> 'PowerFactor':
        return replace(self, scale=self.scale * tau)

    def describe(self) -> str:
        if self.shift == 0 and self.scale == 1:
            return f"z^{self.exponent:g}"
        return f"({self.shift}+{self.scale}z)^{self.exponent:g}"


@dataclass(frozen=True)
class ExpFactor:
    """exp(-rate*z)"""

    rate: complex = 1.0

    def evaluate(self, z: np.ndarray) -> np.ndarray:
        return np.exp(-self.rate * np.asarray(z, dtype=np.complex128))

    def taylor_coefficients(self, center: complex, terms: int) -> np.ndarray:
        coeffs = np.empty(terms, dtype=np.complex128)
        coeffs[0] = np.exp(-self.rate * center)
        for k in range(1, terms):
            coeffs[k] = coeffs[k - 1] * (-self.rate) / k
        return coeffs

    def limit_at_zero(self) -> complex:
        return 1.0

    def rescaled(self, tau: float) -> 'ExpFactor':
        return ExpFactor(self.rate * tau)

    def describe(self) -> str:
        return f"exp(-{self.rate:g}z)" if np.isreal(self.rate) else f"exp(-({self.rate})z)"


Factor = Union[PowerFactor, ExpFactor]


@dataclass(frozen=True)
class SpectralSymbol(SpectralSymbolPort):
    """coefficient * prod(factors)"""

    factors: Tuple[Factor, ...]
    coefficient: complex = 1.0
    label: str = ""

    def evaluate(self, z: np.ndarray) -> np.ndarray:
        z = np.asarray(z, dtype=np.complex128)
        out = np.full(z.shape, self.coefficient, dtype=np.complex128)
        for factor in self.factors:
            out = out * factor.evaluate(z)
        return out

    def taylor_coefficients(self, center: complex, terms: int) -> np.ndarray:
        coeffs = np.zeros(terms, dtype=np.complex128)
        coeffs[0] = self.coefficient
        for factor in self.factors:
            coeffs = np.convolve(coeffs, factor.taylor_coefficients(center, terms))[:terms]
        return coeffs

    def kernel_value(self) -> complex:
        value = complex(self.coefficient)
        for factor in self.factors:
            value *= factor.limit_at_zero()
        return value

    def rescaled(self, tau: float) -> 'SpectralSymbol':
        return SpectralSymbol(
            tuple(f.rescaled(tau) for f in self.factors),
            self.coefficient,
            f"{self.name}[z->{tau:g}z]",
        )

    def times(self, other: 'SpectralSymbol') -> 'SpectralSymbol':
        return SpectralSymbol(
            self.factors + other.factors,
            self.coefficient * other.coefficient,
            f"{self.name}*{other.name}",
        )

    @property
    def name(self) -> str:
        if self.label:
            return self.label
        return "*".join(f.describe() for f in self.factors) or "1"


# ----------------------------------------------------------------------------
# named symbols
# ----------------------------------------------------------------------------

def semigroup_symbol(t: float) -> SpectralSymbol:
    """e^{-t z}"""
    return SpectralSymbol((ExpFactor(t),), label=f"exp(-{t:g}z)")


def qk_symbol(k: int, tau: float) -> SpectralSymbol:
    """(tau z)^k e^{-tau z}; callers pass tau = t^{2m}."""
    factors: Tuple[Factor, ...] = (ExpFactor(tau),)
    if k:
        factors = (PowerFactor(0.0, tau, k),) + factors
    return SpectralSymbol(factors, label=f"Q_{k}[tau={tau:g}]")


def resolvent_symbol(lam: complex) -> SpectralSymbol:
    """(lam + z)^{-1}"""
    return SpectralSymbol((PowerFactor(lam, 1.0, -1.0),), label=f"(({lam})+z)^-1")


def power_symbol(exponent: float) -> SpectralSymbol:
    """z^exponent; the kernel value is 0 for every non-zero exponent."""
    return SpectralSymbol((PowerFactor(0.0, 1.0, exponent),), label=f"z^{exponent:g}")


def calderon_symbol(M: int, tau: float) -> SpectralSymbol:
    """(tau z)^{M+2} e^{-2 tau z}"""
    return SpectralSymbol(
        (PowerFactor(0.0, tau, M + 2), ExpFactor(2.0 * tau)),
        label=f"calderon_M{M}[tau={tau:g}]",
    )
