"""Ratio bands between functional quasi-norms over a function family."""
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
import structlog

from ...domain.constants import DEFAULT_DRIFT_THRESHOLD, DEFAULT_SPREAD_THRESHOLD
from ...domain.entities import EquivalenceReport, FunctionFamily, SpectralFactorization
from ...domain.value_objects import GridFunction, TimeGrid
from ...infrastructure.functionals import FunctionalSpec
from ...infrastructure.lattice import lp_quasinorm
from ...shared.logging import log_skipped_member
from .checks import InvariantCheck, map_members, upper_check

INTERPOLATION_SLACK = 1e-9

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class NormTable:
    """
    ||A f_j||_p for one functional: rows follow the family order, columns
    the exponent list.
    """

    functional: str
    exponents: Tuple[float, ...]
    labels: Tuple[str, ...]
    norms: np.ndarray

    def column(self, p: float) -> np.ndarray:
        return self.norms[:, self.exponents.index(p)]


def evaluate_norms(
    fact: SpectralFactorization,
    spec: FunctionalSpec,
    family: FunctionFamily,
    exponents: Sequence[float],
    time_grid: TimeGrid,
    max_workers: int = 1,
) -> NormTable:
    """Each member is evaluated once; every exponent reuses the sitewise values."""

    def member_norms(f: GridFunction) -> List[float]:
        values = spec.evaluate(fact, f, time_grid)
        return [lp_quasinorm(values, p) for p in exponents]

    rows = map_members(member_norms, family.members, max_workers)
    table = NormTable(spec.label, tuple(exponents), tuple(family.labels), np.asarray(rows, dtype=float))
    logger.debug("functional_norms_evaluated", functional=spec.label, members=len(rows), exponents=list(exponents))
    return table


def member_ratios(
    numerator: np.ndarray, denominator: np.ndarray, labels: Sequence[str], context: str = ""
) -> Tuple[Tuple[float, ...], Tuple[str, ...], Tuple[str, ...]]:
    """
    (ratios, kept labels, skipped labels); a member with both sides zero is
    skipped, a zero denominator alone gives inf.
    """
    ratios, kept, skipped = [], [], []
    for a, b, label in zip(numerator, denominator, labels):
        if a == 0 and b == 0:
            skipped.append(label)
            log_skipped_member(logger, label, "both functionals vanish", comparison=context)
            continue
        ratios.append(float(a / b) if b > 0 else math.inf)
        kept.append(label)
    return tuple(ratios), tuple(kept), tuple(skipped)


def spread_drift(coarse: EquivalenceReport, fine: EquivalenceReport) -> float:
    """max(s_fine/s_coarse, s_coarse/s_fine); inf when either spread is not finite."""
    a, b = coarse.spread, fine.spread
    if not (math.isfinite(a) and math.isfinite(b)):
        return math.inf
    return max(a / b, b / a)


def equivalence_report(
    table_a: NormTable,
    table_b: NormTable,
    p: float,
    refined: Optional[Tuple[NormTable, NormTable]] = None,
    spread_threshold: float = DEFAULT_SPREAD_THRESHOLD,
    drift_threshold: float = DEFAULT_DRIFT_THRESHOLD,
) -> EquivalenceReport:
    """
    Band of ||A f_j||_p / ||B f_j||_p; with refined tables the spread change
    under N -> 2N is recorded as the drift.
    """
    context = f"{table_a.functional}/{table_b.functional}@p={p:g}"
    ratios, kept, skipped = member_ratios(table_a.column(p), table_b.column(p), table_a.labels, context)
    report = EquivalenceReport(
        table_a.functional, table_b.functional, p, ratios, kept,
        spread_threshold=spread_threshold, drift_threshold=drift_threshold, skipped=skipped,
    )
    if refined is not None:
        fine = equivalence_report(refined[0], refined[1], p, None, spread_threshold, drift_threshold)
        report = EquivalenceReport(
            report.functional_a, report.functional_b, p, ratios, kept,
            refinement_drift=spread_drift(report, fine),
            spread_threshold=spread_threshold, drift_threshold=drift_threshold, skipped=skipped,
        )
    logger.info(
        "equivalence_band",
        comparison=context,
        spread=report.spread,
        drift=report.refinement_drift,
        passed=report.passed,
    )
    return report


def equivalence_study(
    fact: SpectralFactorization,
    spec_a: FunctionalSpec,
    spec_b: FunctionalSpec,
    p: float,
    family: FunctionFamily,
    time_grid: TimeGrid,
    spread_threshold: float = DEFAULT_SPREAD_THRESHOLD,
    drift_threshold: float = DEFAULT_DRIFT_THRESHOLD,
) -> EquivalenceReport:
    """Single-grid band for one pair and one exponent."""
    table_a = evaluate_norms(fact, spec_a, family, [p], time_grid)
    table_b = table_a if spec_b == spec_a else evaluate_norms(fact, spec_b, family, [p], time_grid)
    return equivalence_report(table_a, table_b, p, None, spread_threshold, drift_threshold)


def both_directions(table_a: NormTable, table_b: NormTable, p: float, **thresholds) -> List[EquivalenceReport]:
    """A/B and B/A bands (the spread is the same; the bands are reciprocal)."""
    return [
        equivalence_report(table_a, table_b, p, **thresholds),
        equivalence_report(table_b, table_a, p, **thresholds),
    ]


def hardy_interpolation_check(
    fact: SpectralFactorization,
    family: FunctionFamily,
    p0: float,
    p1: float,
    time_grid: TimeGrid,
    theta: float = 0.5,
    max_workers: int = 1,
) -> InvariantCheck:
    """
    Monotonicity sanity check of complex interpolation between H_L^{p0} and
    H_L^{p1}: ||f||_{p_theta} <= ||f||_{p0}^{1-theta} ||f||_{p1}^theta for
    1/p_theta = (1-theta)/p0 + theta/p1. Reports the largest ratio.
    """
    p_theta = 1.0 / ((1.0 - theta) / p0 + theta / p1)
    spec = FunctionalSpec("S_L")

    def member_ratio(f: GridFunction) -> float:
        values = spec.evaluate(fact, f, time_grid)
        left = lp_quasinorm(values, p_theta)
        right = lp_quasinorm(values, p0) ** (1 - theta) * lp_quasinorm(values, p1) ** theta
        return left / right if right > 0 else 0.0

    worst = max(map_members(member_ratio, family.members, max_workers))
    return upper_check(
        "hardy_interpolation_log_convexity",
        worst - 1.0,
        INTERPOLATION_SLACK,
        detail=f"p0={p0:g} p1={p1:g} p_theta={p_theta:.4g}",
    )


def band_rows(reports: Sequence[EquivalenceReport]) -> List[list]:
    rows = []
    for report in reports:
        low, high = report.band
        rows.append([
            report.functional_a, report.functional_b, report.p, low, high,
            report.spread, report.refinement_drift, report.passed,
        ])
    return rows


BAND_HEADER = ["functional_a", "functional_b", "p", "band_low", "band_high", "spread", "drift", "passed"]


def ratio_rows(report: EquivalenceReport) -> List[list]:
    return [
        [report.functional_a, report.functional_b, report.p, label, ratio]
        for label, ratio in zip(report.member_labels, report.ratios)
    ]


RATIO_HEADER = ["functional_a", "functional_b", "p", "member", "ratio"]
