"""Entidad para funciones de la clase Psi_{alpha,beta}(S_mu^0)."""
from dataclasses import dataclass, field, replace
from typing import Any, Dict, Optional

from ..ports import SpectralSymbolPort


@dataclass(frozen=True)
class PsiDescriptor:
    """
    Símbolo psi con sus exponentes de crecimiento en 0 (alpha) y decaimiento
    en infinito (beta) sobre el sector abierto de semiángulo mu.

    El certificado de pertenencia es muestreado, no una prueba: C es el
    máximo de |psi(xi)| / min(|xi|^alpha, |xi|^-beta) sobre los rayos muestreados.
    """

    name: str
    symbol: SpectralSymbolPort
    alpha: float
    beta: float
    mu: float
    parameters: Dict[str, Any] = field(default_factory=dict)
    certificate_constant: Optional[float] = None

    def __post_init__(self):
        if self.alpha <= 0 or self.beta <= 0:
            raise ValueError(
                f"Psi exponents must be positive, received alpha={self.alpha}, beta={self.beta}"
            )

    @property
    def is_certified(self) -> bool:
        return self.certificate_constant is not None and self.certificate_constant < float("inf")

    def with_certificate(self, constant: float) -> 'PsiDescriptor':
        return replace(self, certificate_constant=constant)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "alpha": self.alpha,
            "beta": self.beta,
            "mu": self.mu,
            "parameters": dict(self.parameters),
            "certificate_constant": self.certificate_constant,
        }
