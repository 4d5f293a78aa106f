"""Value Object para bolas periódicas."""
from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class Ball:
    """Bola B(center, radius) del toro; center en coordenadas enteras de sitio."""

    center: Tuple[int, ...]
    radius: float

    def __post_init__(self):
        if isinstance(self.center, int):
            object.__setattr__(self, "center", (self.center,))
        else:
            object.__setattr__(self, "center", tuple(int(c) for c in self.center))
        if not self.radius > 0:
            raise ValueError(f"Ball radius must be positive, received: {self.radius}")

    def to_dict(self) -> dict:
        return {"center": list(self.center), "radius": self.radius}
