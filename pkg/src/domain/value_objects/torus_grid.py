"""Value Object para la malla periódica del toro unitario."""
from dataclasses import dataclass
from typing import Tuple

from ..constants import SUPPORTED_DIMENSIONS, MIN_POINTS_PER_AXIS
from ..exceptions import InvalidGridError


@dataclass(frozen=True)
class TorusGrid:
    """
    Value Object que representa la malla uniforme del toro [0, 1)^n.

    **Características:**
    - Inmutable (frozen=True)
    - Lado del toro fijo en 1, por lo que spacing = 1/N exactamente
    - Auto-validación en construcción

    **Reglas de negocio:**
    - n en {1, 2}
    - N par y N >= 4 (conjunto de frecuencias simétrico)

    Example:
        >>> grid = TorusGrid(1, 8)
        >>> grid.spacing
        0.125
        >>> TorusGrid(2, 16).total_points
        256
    """

    n: int
    """Dimensión espacial"""

    points_per_axis: int
    """Número N de puntos por eje"""

    def __post_init__(self):
        """
        Validación automática al construir.

        Raises:
            InvalidGridError: Si n o N no son admisibles
        """
        if isinstance(self.n, bool) or not isinstance(self.n, int):
            raise InvalidGridError("dimension must be an integer", n=self.n)
        if self.n not in SUPPORTED_DIMENSIONS:
            raise InvalidGridError(
                f"dimension must be one of {SUPPORTED_DIMENSIONS}", n=self.n
            )
        if isinstance(self.points_per_axis, bool) or not isinstance(self.points_per_axis, int):
            raise InvalidGridError("points per axis must be an integer", N=self.points_per_axis)
        if self.points_per_axis < MIN_POINTS_PER_AXIS:
            raise InvalidGridError(
                f"points per axis must be >= {MIN_POINTS_PER_AXIS}", N=self.points_per_axis
            )
        if self.points_per_axis % 2 != 0:
            raise InvalidGridError("points per axis must be even", N=self.points_per_axis)

    @property
    def spacing(self) -> float:
        """Paso h = 1/N."""
        return 1.0 / self.points_per_axis

    @property
    def total_points(self) -> int:
        """Número total de sitios N^n."""
        return self.points_per_axis ** self.n

    @property
    def shape(self) -> Tuple[int, ...]:
        """Forma del arreglo de muestras (N,)*n."""
        return (self.points_per_axis,) * self.n

    @property
    def cell_volume(self) -> float:
        """Peso de cuadratura h^n de cada sitio."""
        return self.spacing ** self.n

    def refined(self) -> 'TorusGrid':
        """Malla con el doble de puntos por eje (estudios de refinamiento)."""
        return TorusGrid(self.n, 2 * self.points_per_axis)

    def site_from_index(self, flat_index: int) -> Tuple[int, ...]:
        """Convierte índice plano (row-major) a coordenadas enteras del sitio."""
        coords = []
        rest = int(flat_index)
        for _ in range(self.n):
            coords.append(rest % self.points_per_axis)
            rest //= self.points_per_axis
        return tuple(reversed(coords))

    def normalize_site(self, site) -> Tuple[int, ...]:
        """Reduce un sitio módulo N; acepta un entero en 1D."""
        if isinstance(site, int):
            site = (site,)
        site = tuple(int(s) % self.points_per_axis for s in site)
        if len(site) != self.n:
            raise InvalidGridError("site has wrong number of coordinates", site=site, n=self.n)
        return site

    def to_dict(self) -> dict:
        return {"n": self.n, "N": self.points_per_axis}

    def __str__(self) -> str:
        return f"T^{self.n}[N={self.points_per_axis}]"
