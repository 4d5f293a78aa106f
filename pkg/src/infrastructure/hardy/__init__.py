"""Hardy quasi-norms, molecules and the Calderon reproducing formula."""
from .quasinorm import hardy_quasinorm
from .molecules import (
    generate_molecule,
    molecular_representation,
    molecule_sum,
    random_witness,
    scaled_powers,
    verify_molecule,
)
from .calderon import calderon_constant, calderon_reproduce, reproduction_error

__all__ = [
    'hardy_quasinorm',
    'generate_molecule',
    'molecular_representation',
    'molecule_sum',
    'random_witness',
    'scaled_powers',
    'verify_molecule',
    'calderon_constant',
    'calderon_reproduce',
    'reproduction_error',
]
