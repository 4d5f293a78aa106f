from .coefficient_field import CoefficientField
from .elliptic_operator import EllipticOperator, FormEstimate, EllipticityCertificate
from .spectral_factorization import SpectralFactorization, SpectralBlock
from .psi_descriptor import PsiDescriptor
from .cone import ConeSampling, TentField
from .cutoff_descriptor import CutoffDescriptor
from .molecule import Molecule, MolecularRepresentation
from .function_family import FunctionFamily, FamilyMemberDescriptor, FamilyMemberKind
from .study_reports import (
    EquivalenceReport,
    DecayFit,
    CaccioppoliResult,
    ConstantBound,
    StudyReport,
    spread_of,
)

__all__ = [
    # Operadores
    'CoefficientField',
    'EllipticOperator',
    'FormEstimate',
    'EllipticityCertificate',

    # Cálculo funcional
    'SpectralFactorization',
    'SpectralBlock',
    'PsiDescriptor',

    # Conos y funcionales
    'ConeSampling',
    'TentField',
    'CutoffDescriptor',

    # Hardy
    'Molecule',
    'MolecularRepresentation',

    # Estudios
    'FunctionFamily',
    'FamilyMemberDescriptor',
    'FamilyMemberKind',
    'EquivalenceReport',
    'DecayFit',
    'CaccioppoliResult',
    'ConstantBound',
    'StudyReport',
    'spread_of',
]
