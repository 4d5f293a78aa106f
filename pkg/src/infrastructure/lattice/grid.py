"""Grid construction."""
from ...domain.value_objects import TorusGrid


def make_grid(n: int, N: int) -> TorusGrid:
    """Torus grid with h = 1/N; rejects odd N, N < 4 and n outside {1, 2}."""
    return TorusGrid(n, N)
