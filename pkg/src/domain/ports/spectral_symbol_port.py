"""Puerto para símbolos escalares del cálculo funcional."""
from abc import ABC, abstractmethod

import numpy as np


class SpectralSymbolPort(ABC):
    """
    Interfaz de una función escalar holomorfa g(z) sobre un sector.

    El cálculo funcional sólo necesita evaluar g, expandirla en serie de
    Taylor alrededor de un punto del espectro, conocer su valor límite en 0
    (núcleo del operador) y reescalarla g(z) -> g(tau z).
    """

    @abstractmethod
    def evaluate(self, z: np.ndarray) -> np.ndarray:
        """
        Evalúa el símbolo.

        Args:
            z: Puntos complejos (rama principal para potencias fraccionarias)

        Returns:
            g(z) con la misma forma que z
        """
        pass

    @abstractmethod
    def taylor_coefficients(self, center: complex, terms: int) -> np.ndarray:
        """
        Coeficientes c_k de g(center + w) = sum_k c_k w^k.

        Args:
            center: Punto de expansión (no nulo salvo símbolos enteros)
            terms: Número de coeficientes

        Returns:
            Arreglo complejo de longitud terms
        """
        pass

    @abstractmethod
    def kernel_value(self) -> complex:
        """Límite de g en 0 por el eje positivo (valor asignado al núcleo)."""
        pass

    @abstractmethod
    def rescaled(self, tau: float) -> 'SpectralSymbolPort':
        """Símbolo z -> g(tau z)."""
        pass

    @property
    @abstractmethod
    def name(self) -> str:
        """Nombre legible del símbolo."""
        pass
