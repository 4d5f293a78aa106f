"""Caso de uso principal: config -> estudio -> archivos de reporte."""
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Type

from ...domain.entities import StudyReport
from ...infrastructure.config import (
    ExperimentConfig,
    LabSettings,
    default_experiment_tree,
    get_settings,
    validate_experiment,
)
from ...infrastructure.serialization import ReportWriter
from ...shared.config import YAMLConfig
from ...shared.logging import LoggerFactory
from ..factories import create_context
from .equivalence_use_cases import ApertureUseCase, DominationUseCase, EquivalenceUseCase, RieszUseCase
from .estimate_use_cases import CaccioppoliUseCase, GaffneyUseCase, PqProbeUseCase
from .hardy_use_cases import MoleculeUseCase, ReproduceUseCase
from .operator_use_cases import SemigroupBenchUseCase, ValidateOperatorUseCase
from .report_merge_use_case import ReportMergeUseCase

STUDY_USE_CASES: Dict[str, Type] = {
    "validate-operator": ValidateOperatorUseCase,
    "semigroup-bench": SemigroupBenchUseCase,
    "gaffney": GaffneyUseCase,
    "caccioppoli": CaccioppoliUseCase,
    "equivalence": EquivalenceUseCase,
    "domination": DominationUseCase,
    "aperture": ApertureUseCase,
    "molecule": MoleculeUseCase,
    "reproduce": ReproduceUseCase,
    "pq-probe": PqProbeUseCase,
    "riesz": RieszUseCase,
    "report-merge": ReportMergeUseCase,
}


@dataclass
class ExperimentResult:
    """Reporte del estudio, configuración efectiva y archivos escritos."""

    report: StudyReport
    config: ExperimentConfig
    output_dir: Path
    written: List[Path] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.report.passed


class RunExperimentUseCase:
    """
    Ejecuta un estudio completo.

    Pasos:
    1. Árbol por defecto + archivo YAML + overrides de la CLI
    2. Validación contra el esquema (ConfigurationError con la ruta del campo)
    3. Contexto (malla, operador, tiempos) y caso de uso del estudio
    4. Reportes JSON/CSV/plot en el directorio de salida
    """

    def __init__(self, settings: Optional[LabSettings] = None):
        self.settings = settings or get_settings()
        self.logger = LoggerFactory.get_application_logger("run_experiment")

    def load_config(
        self,
        config_path: Optional[str] = None,
        overrides: Sequence[str] = (),
        study: Optional[str] = None,
    ) -> ExperimentConfig:
        """
        Raises:
            ConfigurationError: archivo ilegible, override mal formado o esquema inválido
        """
        defaults = default_experiment_tree()
        defaults["study"]["seed"] = self.settings.DEFAULT_SEED
        tree = YAMLConfig(config_path, defaults=defaults)
        if study is not None:
            tree.set("study.name", study)
        tree.apply_overrides(overrides)
        return validate_experiment(tree.get_all())

    def execute(
        self,
        config_path: Optional[str] = None,
        overrides: Sequence[str] = (),
        study: Optional[str] = None,
    ) -> ExperimentResult:
        # 1. Configuración validada
        config = self.load_config(config_path, overrides, study)
        name = config.study.name
        LoggerFactory.set_global_context(study=name, seed=config.study.seed)
        self.logger.info("experiment_started", study=name, config=config_path, overrides=list(overrides))

        # 2. Estudio
        use_case = STUDY_USE_CASES[name]()
        if use_case.requires_context:
            report = use_case.execute(create_context(config, max_workers=self.settings.MAX_WORKERS))
        else:
            report = use_case.execute(config)

        # 3. Reportes
        output_dir = Path(config.output.directory or self.settings.REPORT_DIR)
        written = ReportWriter(str(output_dir), config.output.formats).write(report, config.model_dump())
        self.logger.info("experiment_finished", study=name, passed=report.passed, files=len(written))
        return ExperimentResult(report, config, output_dir, written)
