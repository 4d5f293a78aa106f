"""Invariant bookkeeping and member-parallel evaluation shared by the studies."""
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, TypeVar

from ...domain.ports import LoggerPort
from ...shared.logging import log_invariant_check

T = TypeVar("T")
R = TypeVar("R")


@dataclass(frozen=True)
class InvariantCheck:
    """One measured invariant: value, tolerance and verdict."""

    invariant: str
    measured: float
    tolerance: Optional[float]
    passed: bool
    detail: str = ""

    def row(self) -> list:
        return [self.invariant, self.measured, self.tolerance, self.passed, self.detail]

    def to_dict(self) -> dict:
        return {
            "invariant": self.invariant,
            "measured": self.measured,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "detail": self.detail,
        }


CHECK_HEADER = ["invariant", "measured", "tolerance", "passed", "detail"]


def upper_check(invariant: str, measured: float, tolerance: float, detail: str = "") -> InvariantCheck:
    """measured <= tolerance (NaN fails)."""
    passed = bool(math.isfinite(measured) and measured <= tolerance)
    return InvariantCheck(invariant, float(measured), tolerance, passed, detail)


def flag_check(invariant: str, passed: bool, measured: float = math.nan, detail: str = "") -> InvariantCheck:
    return InvariantCheck(invariant, float(measured), None, bool(passed), detail)


def log_checks(logger: LoggerPort, checks: Sequence[InvariantCheck]) -> None:
    for check in checks:
        log_invariant_check(logger, check.invariant, check.passed, check.measured, check.tolerance)


def map_members(fn: Callable[[T], R], items: Sequence[T], max_workers: int = 1) -> List[R]:
    """fn over items in input order; threads only when max_workers > 1."""
    if max_workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        return list(executor.map(fn, items))


def safe_ratio(numerator: float, denominator: float) -> Optional[float]:
    """
    numerator/denominator for implied constants.

    None when both vanish (member skipped), inf when only the denominator does.
    """
    if denominator > 0:
        return numerator / denominator
    if numerator > 0:
        return math.inf
    return None
