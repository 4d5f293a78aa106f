"""Casos de uso molecule y reproduce."""
import math

from ...domain.entities import StudyReport
from ...domain.value_objects import TimeGrid
from ...infrastructure.serialization import molecule_to_archive
from ...shared.logging import log_measured_constant
from ..factories import StudyContext
from ..services import (
    MOLECULE_HEADER,
    REPRODUCTION_HEADER,
    flag_check,
    generate_molecules,
    molecule_suite,
    molecule_sum_study,
    reproduction_study,
)
from .study_use_case import StudyUseCase


class MoleculeUseCase(StudyUseCase):
    """
    Genera moléculas (p, 2, M, epsilon), las verifica y mide la banda de
    ||S_L alpha||_{L^p}; también la p-suma de una representación aleatoria.
    """

    study = "molecule"

    def _run(self, context: StudyContext, report: StudyReport) -> None:
        section = context.config.study
        p = section.p[0]
        molecules = generate_molecules(
            context.fact, section.molecule_count, p, section.M, section.epsilon,
            seed=section.seed, radius=section.molecule_radius,
        )
        suite = molecule_suite(context.fact, molecules, context.time_grid, section.spread_threshold, context.max_workers)
        report.add_table("molecules", MOLECULE_HEADER, suite["rows"])
        report.add_artifact("molecules", {"p": p, "M": section.M, "molecules": [molecule_to_archive(m) for m in molecules]})

        summed = molecule_sum_study(context.fact, molecules, context.time_grid, seed=section.seed)
        report.sections["molecule_sum"] = summed
        checks = list(suite["checks"]) + [flag_check("molecule_sum_finite", math.isfinite(summed["ratio"]), summed["ratio"])]
        self._record_checks(report, checks)

        log_measured_constant(self.logger, "molecule_norm_spread", suite["spread"])
        report.parameters.update({"p": p, "M": section.M, "epsilon": section.epsilon, "radius": molecules[0].ball.radius})
        report.add_summary("molecules", len(molecules))
        report.add_summary("verified", sum(1 for m in molecules if m.is_verified))
        report.add_summary("norm_spread", suite["spread"])
        report.add_summary("p_sum_ratio", summed["ratio"])


class ReproduceUseCase(StudyUseCase):
    """Error relativo de la fórmula de reproducción de Calderón en miembros de banda limitada."""

    study = "reproduce"

    def _run(self, context: StudyContext, report: StudyReport) -> None:
        section = context.config.study
        time_grid = TimeGrid(section.reproduce_t_min, section.reproduce_t_max, section.reproduce_levels)
        result = reproduction_study(
            context.fact, context.family, section.M, time_grid, section.reproduce_tolerance, context.max_workers
        )
        report.add_table("errors", REPRODUCTION_HEADER, result["rows"])
        self._record_checks(report, result["checks"])
        report.parameters.update({"M": section.M, "reproduce_time_grid": time_grid.to_dict()})
        report.add_summary("max_error", result["max_error"])
        report.add_summary("tolerance", section.reproduce_tolerance)
