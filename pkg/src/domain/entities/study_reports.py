"""Entidades de resultado de los estudios cuantitativos."""
from dataclasses import dataclass, field
import math
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..constants import DEFAULT_DRIFT_THRESHOLD, DEFAULT_SPREAD_THRESHOLD


def spread_of(values: Sequence[float]) -> float:
    """max/min de una banda de razones positivas; inf si alguna no es positiva/finita."""
    arr = np.asarray(values, dtype=float)
    if arr.size == 0 or not np.all(np.isfinite(arr)) or np.any(arr <= 0):
        return math.inf
    return float(arr.max() / arr.min())


@dataclass(frozen=True)
class EquivalenceReport:
    """
    Banda de razones r_j = ||A f_j||_p / ||B f_j||_p sobre una familia.

    passed = razones positivas y finitas, spread <= umbral y (si hubo
    refinamiento N -> 2N) drift <= umbral.
    """

    functional_a: str
    functional_b: str
    p: float
    ratios: Tuple[float, ...]
    member_labels: Tuple[str, ...]
    refinement_drift: Optional[float] = None
    spread_threshold: float = DEFAULT_SPREAD_THRESHOLD
    drift_threshold: float = DEFAULT_DRIFT_THRESHOLD
    skipped: Tuple[str, ...] = ()

    @property
    def band(self) -> Tuple[float, float]:
        if not self.ratios:
            return (math.nan, math.nan)
        return (min(self.ratios), max(self.ratios))

    @property
    def spread(self) -> float:
        return spread_of(self.ratios)

    @property
    def passed(self) -> bool:
        if self.spread > self.spread_threshold:
            return False
        if self.refinement_drift is not None and not self.refinement_drift <= self.drift_threshold:
            return False
        return True

    def to_dict(self) -> dict:
        low, high = self.band
        return {
            "functional_a": self.functional_a,
            "functional_b": self.functional_b,
            "p": self.p,
            "ratios": list(self.ratios),
            "members": list(self.member_labels),
            "band": [low, high],
            "spread": self.spread,
            "refinement_drift": self.refinement_drift,
            "spread_threshold": self.spread_threshold,
            "drift_threshold": self.drift_threshold,
            "skipped": list(self.skipped),
            "passed": self.passed,
        }


@dataclass(frozen=True)
class DecayFit:
    """
    Ajuste log N(d, tau) = a + b log(1/rho) - C rho^q con rho = d / tau^{1/(2m)}.

    q_hat se compara con q_target = 2m/(2m-1) con tolerancia relativa.
    """

    distances: Tuple[float, ...]
    times: Tuple[float, ...]
    log_norms: Tuple[Tuple[float, ...], ...]
    q_hat: float
    q_target: float
    residual: float
    monotone: bool
    degenerate: bool = False
    relative_tolerance: float = 0.3
    points_used: int = 0

    @property
    def relative_error(self) -> float:
        if not math.isfinite(self.q_hat):
            return math.inf
        return abs(self.q_hat - self.q_target) / self.q_target

    @property
    def passed(self) -> bool:
        return (
            not self.degenerate
            and self.monotone
            and self.q_hat > 1
            and self.relative_error <= self.relative_tolerance
        )

    def to_dict(self) -> dict:
        return {
            "distances": list(self.distances),
            "times": list(self.times),
            "log_norms": [list(row) for row in self.log_norms],
            "q_hat": self.q_hat,
            "q_target": self.q_target,
            "relative_error": self.relative_error,
            "residual": self.residual,
            "monotone": self.monotone,
            "degenerate": self.degenerate,
            "points_used": self.points_used,
            "passed": self.passed,
        }


@dataclass(frozen=True)
class CaccioppoliResult:
    """Lados de una desigualdad de Caccioppoli y la constante implícita."""

    variant: str
    x0: Tuple[int, ...]
    r: float
    t0: float
    lhs: float
    rhs_without_constant: float
    implied_constant: float
    epsilon: Optional[float] = None

    @property
    def ratio(self) -> float:
        return self.implied_constant

    def to_dict(self) -> dict:
        return {
            "variant": self.variant,
            "x0": list(self.x0),
            "r": self.r,
            "t0": self.t0,
            "epsilon": self.epsilon,
            "lhs": self.lhs,
            "rhs_without_constant": self.rhs_without_constant,
            "implied_constant": self.implied_constant,
        }


@dataclass(frozen=True)
class ConstantBound:
    """
    Constantes implícitas por miembro de una cota unilateral ||A f|| <= C ||B f||.

    constants[j] es None cuando el miembro se omitió (ambos lados nulos).
    """

    name: str
    statement: str
    constants: Tuple[Optional[float], ...]
    member_labels: Tuple[str, ...]
    threshold: Optional[float] = None

    @property
    def measured(self) -> List[float]:
        return [c for c in self.constants if c is not None]

    @property
    def family_max(self) -> float:
        values = self.measured
        return max(values) if values else math.nan

    @property
    def finite(self) -> bool:
        values = self.measured
        return bool(values) and all(math.isfinite(c) for c in values)

    @property
    def passed(self) -> bool:
        if not self.finite:
            return False
        return self.threshold is None or self.family_max <= self.threshold

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "statement": self.statement,
            "constants": list(self.constants),
            "members": list(self.member_labels),
            "family_max": self.family_max,
            "finite": self.finite,
            "threshold": self.threshold,
            "passed": self.passed,
        }


@dataclass
class StudyReport:
    """
    Reporte completo de un estudio (lo que la CLI serializa).

    tables: nombre -> (encabezados, filas) para exportar como CSV.
    artifacts: nombre -> (formato, payload JSON) escritos aparte como
    <estudio>__<nombre>.json cuando el formato está pedido.
    summary: pares (clave, valor) para la tabla resumen en stdout.
    """

    study: str
    parameters: Dict[str, Any] = field(default_factory=dict)
    sections: Dict[str, Any] = field(default_factory=dict)
    tables: Dict[str, Tuple[List[str], List[List[Any]]]] = field(default_factory=dict)
    summary: List[Tuple[str, Any]] = field(default_factory=list)
    failures: List[str] = field(default_factory=list)
    artifacts: Dict[str, Tuple[str, Any]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def require(self, condition: bool, invariant: str) -> None:
        """Registra una falla con el nombre del invariante si condition es falsa."""
        if not condition:
            self.failures.append(invariant)

    def add_summary(self, key: str, value: Any) -> None:
        self.summary.append((key, value))

    def add_table(self, name: str, header: List[str], rows: List[List[Any]]) -> None:
        self.tables[name] = (list(header), [list(r) for r in rows])

    def add_artifact(self, name: str, payload: Any, fmt: str = "json") -> None:
        self.artifacts[name] = (fmt, payload)

    def to_dict(self) -> dict:
        return {
            "study": self.study,
            "passed": self.passed,
            "failures": list(self.failures),
            "parameters": self.parameters,
            "sections": self.sections,
            "summary": [[k, v] for k, v in self.summary],
        }
