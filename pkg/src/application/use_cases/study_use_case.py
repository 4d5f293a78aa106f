"""Base de los casos de uso de estudios."""
from typing import Any, Dict, Sequence

from ...domain.constants import TENT_DUMP_MAX_VALUES
from ...domain.entities import StudyReport
from ...infrastructure.conegeo import TentGenerator, build_tent_field, tent_energy_profile
from ...infrastructure.serialization import tent_field_to_dict
from ...shared.logging import LoggerFactory, log_operation, log_study_result
from ..factories import StudyContext
from ..services import CHECK_HEADER, InvariantCheck, log_checks
class StudyUseCase:
    """
    Caso de uso de un subcomando: ejecuta el estudio sobre un contexto y
    devuelve el StudyReport que la CLI serializa.

    Las subclases implementan _run(context, report); el registro de inicio,
    fin y resultado es común.
    """

    study: str = ""
    requires_context: bool = True

    def __init__(self):
        self.logger = LoggerFactory.get_study_logger(self.study)

    def execute(self, context: StudyContext) -> StudyReport:
        report = StudyReport(self.study, parameters=self._parameters(context))
        with log_operation(self.logger, f"{self.study}_study", grid=str(context.grid), m=context.operator.m) as op:
            self._run(context, report)
            if "tent" in context.config.output.formats:
                self._attach_tent_field(context, report)
            op.add_metric("failures", len(report.failures))
        log_study_result(self.logger, self.study, report.passed, report.failures)
        return report

    def _parameters(self, context: StudyContext) -> Dict[str, Any]:
        return {
            "operator": context.operator.metadata(),
            "time_grid": context.time_grid.to_dict(),
            "seed": context.seed,
        }

    def _run(self, context: StudyContext, report: StudyReport) -> None:
        raise NotImplementedError

    def _record_checks(self, report: StudyReport, checks: Sequence[InvariantCheck], table: str = "checks") -> None:
        """Tabla de invariantes, log de cada uno y una falla por invariante incumplido."""
        log_checks(self.logger, checks)
        existing = report.tables.get(table, (CHECK_HEADER, []))[1]
        report.add_table(table, CHECK_HEADER, existing + [c.row() for c in checks])
        for check in checks:
            report.require(check.passed, check.invariant)

    def _attach_tent_field(self, context: StudyContext, report: StudyReport) -> None:
        """
        Volcado del campo Q_1 f(y, t_j) del primer miembro de la familia,
        escrito como <estudio>__tent_field.json con el formato "tent".
        """
        size = context.time_grid.levels * context.grid.total_points
        if size > TENT_DUMP_MAX_VALUES:
            self.logger.warning("tent_dump_skipped", values=size, limit=TENT_DUMP_MAX_VALUES)
            report.sections["tent_field"] = {"skipped": f"{size} values > {TENT_DUMP_MAX_VALUES}"}
            return
        if not len(context.family):
            report.sections["tent_field"] = {"skipped": "empty family"}
            return
        generator = TentGenerator.qk(1)
        F = build_tent_field(context.fact, context.family.members[0], generator, context.time_grid)
        report.add_artifact("tent_field", tent_field_to_dict(F), fmt="tent")
        profile = tent_energy_profile(F)
        report.add_table("tent_energy", ["level", "t", "energy"], [[r["level"], r["t"], r["energy"]] for r in profile])
        report.sections["tent_field"] = {"generator": generator.label, "member": context.family.labels[0]}
