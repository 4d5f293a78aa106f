from .exceptions import (
    DomainException,
    InvalidGridError,
    ShapeMismatchError,
    NonFiniteValuesError,
    InvalidExponentError,
    OperatorTooLargeError,
    EllipticityError,
    FactorizationError,
    KernelObstructionError,
    SectorMismatchError,
    InvalidSpectralArgumentError,
    InvalidTimeGridError,
    InvalidFunctionalError,
    MoleculePreconditionError,
    MoleculeConstructionError,
    StudyPreconditionError,
    ConfigurationError,
)

__all__ = [
    'DomainException',
    'InvalidGridError',
    'ShapeMismatchError',
    'NonFiniteValuesError',
    'InvalidExponentError',
    'OperatorTooLargeError',
    'EllipticityError',
    'FactorizationError',
    'KernelObstructionError',
    'SectorMismatchError',
    'InvalidSpectralArgumentError',
    'InvalidTimeGridError',
    'InvalidFunctionalError',
    'MoleculePreconditionError',
    'MoleculeConstructionError',
    'StudyPreconditionError',
    'ConfigurationError',
]
