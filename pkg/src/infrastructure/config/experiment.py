"""
Experiment configuration schema (one YAML file per run).

The YAML tree is validated into ExperimentConfig before any computation;
schema violations surface as ConfigurationError carrying the dotted path of
the offending leaf (for example ``time_grid.levels``).
"""
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from ...domain.constants import (
    DEFAULT_DRIFT_THRESHOLD,
    DEFAULT_EXPONENTS,
    DEFAULT_FORM_TRIALS,
    DEFAULT_SPREAD_THRESHOLD,
    DEFAULT_T_MAX,
    DEFAULT_TIME_LEVELS,
    GRADIENT_DOMINATION_APERTURE,
    GRADIENT_DOMINATION_APERTURE_SWEEP,
    MIN_CACCIOPPOLI_TIME_SAMPLES,
    MIN_FAMILY_SIZE,
    MIN_PQ_PROBES,
    MIN_TIME_LEVELS,
)
from ...domain.exceptions import ConfigurationError

StudyName = Literal[
    "validate-operator",
    "semigroup-bench",
    "gaffney",
    "caccioppoli",
    "equivalence",
    "domination",
    "aperture",
    "molecule",
    "reproduce",
    "pq-probe",
    "riesz",
    "report-merge",
]

STUDY_NAMES = StudyName.__args__


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid")


class GridSection(_Section):
    n: int = Field(default=1, ge=1, le=2)
    N: int = Field(default=64, ge=4)

    @field_validator("N")
    @classmethod
    def even_points(cls, v: int) -> int:
        if v % 2:
            raise ValueError("N must be even")
        return v


class OperatorSection(_Section):
    m: int = Field(default=1, ge=1, le=3)
    kind: Literal["polyharmonic", "random", "file"] = "polyharmonic"
    delta: float = Field(default=0.3, ge=0.0, lt=1.0)
    seed: int = Field(default=0, ge=0)
    form_trials: int = Field(default=DEFAULT_FORM_TRIALS, ge=1)
    coefficients_file: Optional[str] = None


class TimeGridSection(_Section):
    t_min: Optional[float] = Field(default=None, gt=0.0)
    t_max: float = Field(default=DEFAULT_T_MAX, gt=0.0)
    levels: int = Field(default=DEFAULT_TIME_LEVELS, ge=MIN_TIME_LEVELS)

    @model_validator(mode="after")
    def ordered(self) -> 'TimeGridSection':
        if self.t_min is not None and self.t_min >= self.t_max:
            raise ValueError("t_min must be smaller than t_max")
        return self


class FamilySection(_Section):
    fourier_modes: List[int] = Field(default_factory=lambda: [1, 2, 4, 8])
    gaussian_widths: List[float] = Field(default_factory=lambda: [0.05, 0.1, 0.2, 0.4])
    random_count: int = Field(default=4, ge=0)
    random_band: int = Field(default=8, ge=1)
    indicator_widths: List[float] = Field(default_factory=list)
    molecules: int = Field(default=0, ge=0)
    seed: int = Field(default=0, ge=0)

    @field_validator("gaussian_widths", "indicator_widths")
    @classmethod
    def positive_widths(cls, v: List[float]) -> List[float]:
        if any(w <= 0 for w in v):
            raise ValueError("widths must be positive")
        return v


class StudySection(_Section):
    name: StudyName = "validate-operator"
    seed: int = Field(default=0, ge=0)
    p: List[float] = Field(default_factory=lambda: list(DEFAULT_EXPONENTS))
    family: FamilySection = Field(default_factory=FamilySection)
    min_family_size: int = Field(default=MIN_FAMILY_SIZE, ge=1)
    refine: bool = True
    spread_threshold: float = Field(default=DEFAULT_SPREAD_THRESHOLD, gt=1.0)
    drift_threshold: float = Field(default=DEFAULT_DRIFT_THRESHOLD, ge=1.0)

    # equivalence / aperture
    a: str = "S_L"
    b: str = "N_hL"
    apertures: List[float] = Field(default_factory=lambda: [1.0, 2.0])
    aperture_functionals: List[str] = Field(default_factory=lambda: ["S_L", "S_hL"])
    aperture_spread_threshold: float = Field(default=4.0, gt=1.0)

    # domination
    gamma: float = Field(default=GRADIENT_DOMINATION_APERTURE, gt=0.0)
    gamma_sweep: List[float] = Field(default_factory=lambda: list(GRADIENT_DOMINATION_APERTURE_SWEEP))
    pointwise_members: int = Field(default=5, ge=1)
    interpolation_trials: int = Field(default=20, ge=1)
    tent_k_max: int = Field(default=4, ge=0)

    # semigroup bench / pq probe / riesz
    probes: int = Field(default=50, ge=1)
    oracle: bool = False
    times: List[float] = Field(default_factory=lambda: [1e-4, 1e-3, 1e-2, 1e-1])

    # gaffney
    separations: List[float] = Field(default_factory=lambda: [0.04, 0.08, 0.12, 0.16, 0.2, 0.24])
    scales: List[float] = Field(default_factory=lambda: [0.03, 0.045, 0.06])
    patch_radius: float = Field(default=0.05, gt=0.0)
    decay_tolerance: float = Field(default=0.3, gt=0.0)

    # caccioppoli
    configs: int = Field(default=50, ge=1)
    variants: List[Literal["ineq1", "ineq2", "ineq3"]] = Field(default_factory=lambda: ["ineq1", "ineq2", "ineq3"])
    caccioppoli_epsilon: float = Field(default=0.5, gt=0.0)
    time_samples: int = Field(default=64, ge=MIN_CACCIOPPOLI_TIME_SAMPLES)

    # molecules / reproduce
    M: int = Field(default=2, ge=0)
    epsilon: float = Field(default=1.0, gt=0.0)
    molecule_count: int = Field(default=20, ge=1)
    molecule_radius: Optional[float] = Field(default=None, gt=0.0)
    reproduce_t_min: float = Field(default=1e-3, gt=0.0)
    reproduce_t_max: float = Field(default=10.0, gt=0.0)
    reproduce_levels: int = Field(default=200, ge=MIN_TIME_LEVELS)
    reproduce_tolerance: float = Field(default=1e-3, gt=0.0)

    # report-merge
    inputs: List[str] = Field(default_factory=list)

    @field_validator("p")
    @classmethod
    def positive_exponents(cls, v: List[float]) -> List[float]:
        if not v:
            raise ValueError("at least one exponent is required")
        if any(not p > 0 for p in v):
            raise ValueError("exponents must be positive")
        return v

    @field_validator("apertures", "gamma_sweep", "times", "separations", "scales")
    @classmethod
    def positive_entries(cls, v: List[float]) -> List[float]:
        if any(not x > 0 for x in v):
            raise ValueError("entries must be positive")
        return v


class OutputSection(_Section):
    directory: Optional[str] = None
    formats: List[Literal["json", "csv", "plot", "tent"]] = Field(default_factory=lambda: ["json", "csv", "plot"])


class ExperimentConfig(_Section):
    grid: GridSection = Field(default_factory=GridSection)
    operator: OperatorSection = Field(default_factory=OperatorSection)
    time_grid: TimeGridSection = Field(default_factory=TimeGridSection)
    study: StudySection = Field(default_factory=StudySection)
    output: OutputSection = Field(default_factory=OutputSection)


def default_experiment_tree() -> Dict[str, Any]:
    return ExperimentConfig().model_dump()


def _field_path(error: Dict[str, Any]) -> str:
    return ".".join(str(part) for part in error.get("loc", ())) or "<root>"


def _check_operator(config: ExperimentConfig) -> None:
    section = config.operator
    if section.kind == "file" and not section.coefficients_file:
        raise ConfigurationError("operator.coefficients_file", "kind 'file' needs a coefficients file")
    if section.kind != "file" and section.coefficients_file:
        raise ConfigurationError("operator.coefficients_file", f"only used with kind 'file', got '{section.kind}'")


def _check_study_preconditions(config: ExperimentConfig) -> None:
    """Cross-field rules that depend on the selected study."""
    from ..functionals import registered_functionals

    study = config.study
    known = registered_functionals()
    if study.name == "equivalence":
        for key in ("a", "b"):
            if getattr(study, key) not in known:
                raise ConfigurationError(f"study.{key}", f"unknown functional, expected one of {list(known)}")
    if study.name == "aperture":
        for name in study.aperture_functionals:
            if name not in known:
                raise ConfigurationError("study.aperture_functionals", f"unknown functional '{name}'")
        if len(study.apertures) < 2:
            raise ConfigurationError("study.apertures", "need at least two apertures")
    if study.name == "pq-probe" and study.probes < MIN_PQ_PROBES:
        raise ConfigurationError("study.probes", f"pq-probe needs at least {MIN_PQ_PROBES} probes")
    if study.name == "molecule":
        p = study.p[0]
        if not 0 < p <= 1:
            raise ConfigurationError("study.p", "molecules need p in (0, 1]")
        threshold = config.grid.n / (2 * config.operator.m) * (1.0 / p - 0.5)
        if study.M < 1 or not study.M > threshold:
            raise ConfigurationError("study.M", f"need M >= 1 and M > n/(2m)(1/p - 1/2) = {threshold:.4f}")
    if study.name == "gaffney":
        reach = study.patch_radius + max(study.separations)
        if reach >= 0.5:
            raise ConfigurationError("study.separations", "patch radius + separation must stay below 1/2")
    if study.name == "reproduce" and study.reproduce_t_min >= study.reproduce_t_max:
        raise ConfigurationError("study.reproduce_t_min", "must be smaller than study.reproduce_t_max")
    if study.name == "report-merge" and not study.inputs:
        raise ConfigurationError("study.inputs", "report-merge needs at least one input report")


def validate_experiment(tree: Dict[str, Any]) -> ExperimentConfig:
    """
    Validate a raw config tree.

    Raises:
        ConfigurationError: with the dotted path of the first invalid leaf
    """
    try:
        config = ExperimentConfig.model_validate(tree)
    except ValidationError as exc:
        first = exc.errors()[0]
        raise ConfigurationError(_field_path(first), first.get("msg", "invalid value")) from exc
    _check_operator(config)
    _check_study_preconditions(config)
    return config
