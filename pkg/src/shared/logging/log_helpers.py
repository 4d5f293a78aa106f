"""Helpers con nombres de evento uniformes para los estudios."""
import math
from typing import Any, Optional

from ...domain.ports import LoggerPort


def log_error_message(
    logger: LoggerPort,
    message: str,
    error: Optional[Exception] = None,
    **context: Any
) -> None:
    """
    Error con tipo y mensaje; si la excepción nombra un campo o parámetro
    (``field_path``, ``params``) también se registra.

    Example:
        log_error_message(logger, "study_aborted", error=e, study="gaffney")
    """
    fields = dict(context)
    if error is not None:
        fields["error_type"] = type(error).__name__
        fields["error_message"] = str(error)
        for attribute in ("field_path", "params"):
            value = getattr(error, attribute, None)
            if value:
                fields[attribute] = value
    logger.error(message, **fields)


def log_invariant_check(
    logger: LoggerPort,
    invariant: str,
    passed: bool,
    measured: Optional[float] = None,
    tolerance: Optional[float] = None,
    **context: Any
) -> None:
    """
    Registra la verificación de un invariante numérico.

    Los fallos salen como warning para que se vean sin DEBUG.

    Args:
        logger: Logger a usar
        invariant: Nombre del invariante (p. ej. "semigroup_contraction")
        passed: Resultado
        measured: Valor medido (desviación, razón...)
        tolerance: Umbral contra el que se comparó
    """
    event = logger.info if passed else logger.warning
    event(
        "invariant_checked",
        invariant=invariant,
        passed=passed,
        measured=measured,
        tolerance=tolerance,
        **context
    )


def log_measured_constant(
    logger: LoggerPort,
    name: str,
    value: float,
    **context: Any
) -> None:
    """
    Registra una constante implícita medida (C_hat, C0_hat, q_hat...).

    Example:
        log_measured_constant(logger, "caccioppoli_C_hat", 3.2, variant="ineq2")
    """
    logger.info(
        "constant_measured",
        constant=name,
        value=value,
        finite=bool(math.isfinite(value)),
        **context
    )


def log_skipped_member(logger: LoggerPort, member: str, reason: str, **context: Any) -> None:
    """Miembro de familia omitido (ambos lados nulos, p. ej. f constante)."""
    logger.info("family_member_skipped", member=member, reason=reason, **context)


def log_study_result(
    logger: LoggerPort,
    study: str,
    passed: bool,
    failures: Optional[list] = None,
    **metrics: Any
) -> None:
    """
    Registra el resultado final de un estudio.

    Example:
        log_study_result(logger, "equivalence", report.passed, report.failures, spread=4.1)
    """
    event = logger.info if passed else logger.warning
    event(
        "study_finished",
        study=study,
        passed=passed,
        failures=list(failures or []),
        **metrics
    )
