"""Caso de uso report-merge."""
from ...domain.entities import StudyReport
from ...infrastructure.config import ExperimentConfig
from ...shared.logging import LoggerFactory, log_operation, log_study_result
from ..services import merge_reports


class ReportMergeUseCase:
    """
    Une reportes JSON ya escritos en una tabla; no necesita operador.

    Reglas:
    - Todos los archivos deben existir y tener el mismo schema
    - El resultado pasa sólo si todos los reportes de entrada pasaron
    """

    study = "report-merge"
    requires_context = False

    def __init__(self):
        self.logger = LoggerFactory.get_study_logger(self.study)

    def execute(self, config: ExperimentConfig) -> StudyReport:
        with log_operation(self.logger, "report_merge", inputs=len(config.study.inputs)):
            report = merge_reports(config.study.inputs)
        log_study_result(self.logger, self.study, report.passed, report.failures)
        return report
