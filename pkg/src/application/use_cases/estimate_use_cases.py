"""Casos de uso gaffney, caccioppoli y pq-probe."""
import math

from ...domain.entities import StudyReport
from ...shared.logging import log_measured_constant
from ..factories import StudyContext
from ..services import (
    PROBE_HEADER,
    flag_check,
    gaffney_check,
    l2_contraction_check,
    max_constants,
    pq_interval_probe,
    random_configs,
    refinement_drift,
    run_configs,
    upper_check,
)
from .study_use_case import StudyUseCase


class GaffneyUseCase(StudyUseCase):
    """Ajuste del exponente de decaimiento fuera de la diagonal (q_target = 2m/(2m-1))."""

    study = "gaffney"

    def _run(self, context: StudyContext, report: StudyReport) -> None:
        section = context.config.study
        fit = gaffney_check(
            context.fact,
            section.separations,
            section.scales,
            probes=section.probes,
            patch_radius=section.patch_radius,
            seed=section.seed,
            relative_tolerance=section.decay_tolerance,
        )
        report.sections["decay_fit"] = fit.to_dict()
        rows = [
            [d, s, value]
            for s, row in zip(fit.times, fit.log_norms)
            for d, value in zip(fit.distances, row)
        ]
        report.add_table("decay", ["distance", "scale", "log_norm"], rows)
        self._record_checks(report, [
            flag_check("decay_fit_nondegenerate", not fit.degenerate, float(fit.points_used)),
            flag_check("decay_monotone", fit.monotone),
            upper_check("decay_exponent", fit.relative_error, fit.relative_tolerance, detail=f"q_hat={fit.q_hat:.4g}"),
        ])
        log_measured_constant(self.logger, "q_hat", fit.q_hat, q_target=fit.q_target)
        report.add_summary("q_hat", fit.q_hat)
        report.add_summary("q_target", fit.q_target)
        report.add_summary("residual", fit.residual)


class CaccioppoliUseCase(StudyUseCase):
    """
    Constantes implícitas de las desigualdades de Caccioppoli sobre
    configuraciones aleatorias (x0, r, t0) y su estabilidad bajo N -> 2N.
    """

    study = "caccioppoli"

    def _run(self, context: StudyContext, report: StudyReport) -> None:
        section = context.config.study
        band = section.family.random_band

        # 1. Configuraciones en la malla N
        configs = random_configs(context.grid, section.configs, section.seed)
        results = run_configs(
            context.fact, configs, section.variants, section.caccioppoli_epsilon, section.time_samples, band
        )
        coarse = max_constants(results)
        report.add_table(
            "constants",
            ["variant", "x0", "r", "t0", "epsilon", "lhs", "rhs_without_constant", "implied_constant"],
            [[r.variant, list(r.x0), r.r, r.t0, r.epsilon, r.lhs, r.rhs_without_constant, r.implied_constant] for r in results],
        )
        checks = [
            flag_check(f"caccioppoli_{variant}_finite", math.isfinite(value), value)
            for variant, value in coarse.items()
        ]
        for variant, value in coarse.items():
            log_measured_constant(self.logger, "caccioppoli_C_hat", value, variant=variant)
            report.add_summary(f"max_C_{variant}", value)

        # 2. Mismas configuraciones en la malla 2N
        if section.refine:
            fine_context = context.refined()
            fine_results = run_configs(
                fine_context.fact, [c.refined() for c in configs], section.variants,
                section.caccioppoli_epsilon, section.time_samples, band,
            )
            fine = max_constants(fine_results)
            drift = refinement_drift(coarse, fine)
            report.sections["refined_max"] = fine
            report.sections["refinement_drift"] = drift
            for variant, value in drift.items():
                if value is None:
                    stable = coarse[variant] == fine.get(variant, 0.0)
                    checks.append(flag_check(f"caccioppoli_{variant}_refinement", stable))
                else:
                    checks.append(upper_check(f"caccioppoli_{variant}_refinement", value, section.drift_threshold))
                    report.add_summary(f"drift_{variant}", value)
        self._record_checks(report, checks)
        report.add_summary("configs", len(configs))


class PqProbeUseCase(StudyUseCase):
    """Cotas inferiores de ||e^{-tL}||_{p->p}; sólo una exploración heurística."""

    study = "pq-probe"

    def _run(self, context: StudyContext, report: StudyReport) -> None:
        section = context.config.study
        result = pq_interval_probe(context.fact, section.p, section.times, section.probes, section.seed)
        report.add_table("estimates", PROBE_HEADER, result["rows"])
        report.sections["sup_over_t"] = {f"{p:g}": value for p, value in result["sup"].items()}
        report.sections["lower_bound_only"] = True
        self._record_checks(report, [l2_contraction_check(result["sup"])])
        for p, value in result["sup"].items():
            report.add_summary(f"sup_t p={p:g} (lower bound)", value)
