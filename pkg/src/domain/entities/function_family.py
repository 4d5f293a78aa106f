"""Entidades para familias de funciones de prueba de los estudios."""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from ..constants import MIN_FAMILY_SIZE
from ..exceptions import StudyPreconditionError
from ..value_objects import GridFunction


class FamilyMemberKind(Enum):
    """Tipos de miembros de una familia."""
    FOURIER_MODE = "fourier_mode"
    GAUSSIAN_BUMP = "gaussian_bump"
    RANDOM_BANDLIMITED = "random_bandlimited"
    MOLECULE = "molecule"
    INDICATOR_SMOOTHED = "indicator_smoothed"


@dataclass(frozen=True)
class FamilyMemberDescriptor:
    """Descriptor reproducible de un miembro (tipo, parámetros, semilla)."""

    kind: FamilyMemberKind
    parameters: Tuple[Tuple[str, Any], ...] = ()
    seed: Optional[int] = None

    @classmethod
    def of(cls, kind: FamilyMemberKind, seed: Optional[int] = None, **parameters: Any) -> 'FamilyMemberDescriptor':
        return cls(kind, tuple(sorted(parameters.items())), seed)

    @property
    def params(self) -> Dict[str, Any]:
        return dict(self.parameters)

    @property
    def label(self) -> str:
        parts = [f"{k}={v}" for k, v in self.parameters]
        if self.seed is not None:
            parts.append(f"seed={self.seed}")
        return f"{self.kind.value}({','.join(parts)})"


@dataclass
class FunctionFamily:
    """
    Familia de funciones realizadas, todas proyectadas a media cero.

    **Reglas de negocio:**
    - Ningún miembro idénticamente nulo tras la proyección
    - Al menos MIN_FAMILY_SIZE miembros para un estudio (ver require_study_size)
    """

    descriptors: List[FamilyMemberDescriptor]
    members: List[GridFunction]
    skipped: List[str] = field(default_factory=list)

    def __post_init__(self):
        if len(self.descriptors) != len(self.members):
            raise ValueError(
                f"Descriptor count {len(self.descriptors)} != member count {len(self.members)}"
            )
        for descriptor, member in zip(self.descriptors, self.members):
            if member.is_zero():
                raise ValueError(f"Family member {descriptor.label} is identically zero")

    def __len__(self) -> int:
        return len(self.members)

    @property
    def labels(self) -> List[str]:
        return [d.label for d in self.descriptors]

    def require_study_size(self, study: str, minimum: int = MIN_FAMILY_SIZE) -> None:
        if len(self) < minimum:
            raise StudyPreconditionError(
                study, f"family has {len(self)} members, at least {minimum} required"
            )

    def head(self, count: int) -> 'FunctionFamily':
        return FunctionFamily(self.descriptors[:count], self.members[:count], list(self.skipped))
