"""Application use cases: one per subcommand plus the experiment runner."""
from .study_use_case import StudyUseCase
from .operator_use_cases import SemigroupBenchUseCase, ValidateOperatorUseCase
from .estimate_use_cases import CaccioppoliUseCase, GaffneyUseCase, PqProbeUseCase
from .equivalence_use_cases import ApertureUseCase, DominationUseCase, EquivalenceUseCase, RieszUseCase
from .hardy_use_cases import MoleculeUseCase, ReproduceUseCase
from .report_merge_use_case import ReportMergeUseCase
from .run_experiment_use_case import STUDY_USE_CASES, ExperimentResult, RunExperimentUseCase

__all__ = [
    "StudyUseCase",
    "ValidateOperatorUseCase",
    "SemigroupBenchUseCase",
    "GaffneyUseCase",
    "CaccioppoliUseCase",
    "PqProbeUseCase",
    "EquivalenceUseCase",
    "ApertureUseCase",
    "DominationUseCase",
    "RieszUseCase",
    "MoleculeUseCase",
    "ReproduceUseCase",
    "ReportMergeUseCase",
    "STUDY_USE_CASES",
    "ExperimentResult",
    "RunExperimentUseCase",
]
