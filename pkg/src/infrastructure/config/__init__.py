"""Infrastructure configuration module."""
from .settings import LabSettings, get_settings, reset_settings
from .experiment import (
    STUDY_NAMES,
    ExperimentConfig,
    default_experiment_tree,
    validate_experiment,
)

__all__ = [
    "LabSettings",
    "get_settings",
    "reset_settings",
    "STUDY_NAMES",
    "ExperimentConfig",
    "default_experiment_tree",
    "validate_experiment",
]
