"""Factory para construir malla, operador, tiempos y contexto de estudio desde la configuración."""
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from ...domain.entities import CoefficientField, EllipticOperator, FunctionFamily, SpectralFactorization
from ...domain.exceptions import ConfigurationError, DomainException
from ...domain.value_objects import TimeGrid, TorusGrid
from ...infrastructure.config import ExperimentConfig
from ...infrastructure.conegeo import make_time_grid
from ...infrastructure.elliptic import (
    assemble,
    polyharmonic_coefficients,
    random_elliptic_coefficients,
    resample_coefficients,
)
from ...infrastructure.funcalc import factorize
from ...infrastructure.lattice import make_grid
from ...infrastructure.serialization import load_coefficient_field
from ...shared.logging import LoggerFactory


def create_grid(config: ExperimentConfig) -> TorusGrid:
    return make_grid(config.grid.n, config.grid.N)


def create_operator(config: ExperimentConfig, grid: Optional[TorusGrid] = None) -> EllipticOperator:
    """
    Ensambla el operador descrito en config.operator.

    Los campos aleatorios dependen sólo de (seed, banda), así que el mismo
    operador se muestrea en N y 2N. Un campo leído de archivo se interpola
    a la malla pedida (N múltiplo del N guardado).
    """
    grid = grid or create_grid(config)
    section = config.operator
    if section.kind == "polyharmonic":
        coeffs = polyharmonic_coefficients(section.m, grid)
    elif section.kind == "random":
        coeffs = random_elliptic_coefficients(section.m, grid, section.delta, section.seed)
    else:
        coeffs = load_coefficients(section.coefficients_file, section.m, grid)
    return assemble(coeffs, trials=section.form_trials, seed=section.seed)


def load_coefficients(path: str, m: int, grid: TorusGrid) -> CoefficientField:
    """
    Lee un CoefficientField guardado con save_coefficient_field.

    Raises:
        ConfigurationError: archivo ilegible o incompatible con (m, malla)
    """
    field_path = "operator.coefficients_file"
    try:
        coeffs = load_coefficient_field(Path(path))
    except (OSError, ValueError, KeyError, TypeError, DomainException) as exc:
        raise ConfigurationError(field_path, f"cannot read '{path}': {exc}") from exc
    if coeffs.m != m:
        raise ConfigurationError(field_path, f"file has m={coeffs.m}, operator.m is {m}")
    if coeffs.grid.n != grid.n:
        raise ConfigurationError(field_path, f"file has n={coeffs.grid.n}, grid.n is {grid.n}")
    if grid.points_per_axis % coeffs.grid.points_per_axis:
        raise ConfigurationError(
            field_path,
            f"grid.N={grid.points_per_axis} is not a multiple of the stored N={coeffs.grid.points_per_axis}",
        )
    return resample_coefficients(coeffs, grid)


def create_reference_factorization(grid: TorusGrid) -> SpectralFactorization:
    """Factorización del laplaciano (m = 1 polyharmónico) usado como H^p clásico."""
    return factorize(assemble(polyharmonic_coefficients(1, grid)))


def create_time_grid(config: ExperimentConfig, grid: TorusGrid) -> TimeGrid:
    """t_min por defecto = h."""
    section = config.time_grid
    t_min = section.t_min if section.t_min is not None else grid.spacing
    return make_time_grid(t_min, section.t_max, section.levels)


def refined_config(config: ExperimentConfig) -> ExperimentConfig:
    """
    Misma configuración con N -> 2N.

    Con t_min por defecto (= h) la ventana de tiempos crece una octava; se
    agregan niveles para conservar la razón geométrica.
    """
    grid = config.grid.model_copy(update={"N": 2 * config.grid.N})
    time_grid = config.time_grid
    if time_grid.t_min is None:
        delta = math.log(time_grid.t_max * config.grid.N) / (time_grid.levels - 1)
        extra = math.ceil(math.log(2.0) / delta) if delta > 0 else 0
        time_grid = time_grid.model_copy(update={"levels": time_grid.levels + extra})
    return config.model_copy(update={"grid": grid, "time_grid": time_grid})


@dataclass
class StudyContext:
    """
    Todo lo que un estudio necesita: operador, factorización (perezosa),
    malla de tiempos y familia de funciones (perezosa).
    """

    config: ExperimentConfig
    grid: TorusGrid
    operator: EllipticOperator
    time_grid: TimeGrid
    max_workers: int = 1
    _fact: Optional[SpectralFactorization] = field(default=None, repr=False)
    _family: Optional[FunctionFamily] = field(default=None, repr=False)

    @property
    def fact(self) -> SpectralFactorization:
        if self._fact is None:
            self._fact = factorize(self.operator)
        return self._fact

    @property
    def family(self) -> FunctionFamily:
        if self._family is None:
            from .function_family_factory import create_function_family

            self._family = create_function_family(self.config.study.family, self.grid, self.operator)
        return self._family

    @property
    def seed(self) -> int:
        return self.config.study.seed

    def refined(self) -> 'StudyContext':
        """Contexto equivalente en la malla 2N."""
        return create_context(refined_config(self.config), max_workers=self.max_workers)


def create_context(config: ExperimentConfig, max_workers: int = 1) -> StudyContext:
    """
    Construye el contexto de un estudio.

    Example:
        >>> context = create_context(validate_experiment({"grid": {"N": 32}}))
        >>> context.operator.m
        1
    """
    logger = LoggerFactory.get_application_logger("operator_factory")
    grid = create_grid(config)
    operator = create_operator(config, grid)
    time_grid = create_time_grid(config, grid)
    logger.info(
        "study_context_created",
        grid=str(grid),
        m=operator.m,
        kind=config.operator.kind,
        levels=time_grid.levels,
        t_min=time_grid.t_min,
        t_max=time_grid.t_max,
    )
    return StudyContext(config, grid, operator, time_grid, max_workers=max_workers)
