"""Casos de uso validate-operator y semigroup-bench."""
import math

from ...domain.entities import StudyReport
from ...domain.exceptions import SectorMismatchError
from ...infrastructure.funcalc import certify, kato_constants, power_exp_psi, psi_norm_profile
from ...infrastructure.serialization import coefficient_field_to_dict
from ...shared.logging import log_measured_constant
from ..factories import StudyContext
from ..services import flag_check, semigroup_bench, validate_operator
from .study_use_case import StudyUseCase


class ValidateOperatorUseCase(StudyUseCase):
    """
    Valida el operador ensamblado.

    Reglas:
    - elipticidad de forma medida por sondeo y elipticidad fuerte por escaneo puntual
    - L acretivo y espectro dentro del sector de ángulo omega
    - factorización exacta con núcleo = constantes
    """

    study = "validate-operator"

    def _run(self, context: StudyContext, report: StudyReport) -> None:
        op = context.operator
        fact = context.fact
        self._record_checks(report, validate_operator(op, fact))

        report.sections["form_estimate"] = op.form_estimate.to_dict()
        report.sections["certificate"] = op.certificate.to_dict()
        report.sections["factorization"] = fact.summary()
        report.add_artifact("coefficients", coefficient_field_to_dict(op.coefficients))
        report.add_summary("lambda1", op.certificate.lambda1)
        report.add_summary("lambda0_hat", op.garding_lower)
        report.add_summary("Lambda0_hat", op.form_upper)
        report.add_summary("omega", op.type_angle)
        report.add_summary("norm", op.norm)
        log_measured_constant(self.logger, "lambda1", op.certificate.lambda1)


class SemigroupBenchUseCase(StudyUseCase):
    """
    Banco del cálculo funcional: ley de semigrupo, continuidad fuerte,
    contracciones, raíz cuadrada, núcleo y (opcional) oráculo expm.

    También registra las constantes de Kato y el perfil de normas de
    psi(t^{2m} L) para psi(z) = z e^{-z}.
    """

    study = "semigroup-bench"

    def _run(self, context: StudyContext, report: StudyReport) -> None:
        section = context.config.study
        fact = context.fact
        polyharmonic = context.config.operator.kind == "polyharmonic"

        # 1. Invariantes del semigrupo
        checks = semigroup_bench(
            fact, section.probes, section.times, seed=section.seed, oracle=section.oracle, polyharmonic=polyharmonic
        )

        # 2. Constantes de Kato (dos lados)
        kato = kato_constants(fact, probes=section.probes, seed=section.seed)
        checks.append(flag_check("kato_constants_finite", kato.finite, kato.upper / kato.lower if kato.lower > 0 else math.inf))
        report.sections["kato"] = kato.to_dict()
        self._record_checks(report, checks)

        # 3. Perfil de psi(t^{2m} L); fuera del sector sólo se anota
        psi = certify(power_exp_psi(1))
        try:
            profile = psi_norm_profile(fact, psi, section.times)
        except SectorMismatchError as e:
            report.sections["psi_profile"] = {"skipped": str(e)}
        else:
            report.sections["psi_profile"] = {**profile, "psi": psi.to_dict()}
            report.add_table("psi_profile", ["t", "norm"], [[s["t"], s["norm"]] for s in profile["samples"]])
            self._record_checks(report, [flag_check("psi_profile_finite", profile["finite"], profile["max_norm"] or math.nan)])

        report.parameters["oracle"] = section.oracle
        report.add_summary("probes", section.probes)
        report.add_summary("kato_lower", kato.lower)
        report.add_summary("kato_upper", kato.upper)
        report.add_summary("checks_passed", sum(1 for c in checks if c.passed))
        report.add_summary("checks_total", len(checks))
