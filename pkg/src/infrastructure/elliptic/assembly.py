"""Dense assembly of L = sum (-1)^m d^alpha (a_{alpha,beta} d^beta)."""
import numpy as np
import structlog

from ...domain.constants import DENSE_POINT_CAP, DEFAULT_FORM_SEED, DEFAULT_FORM_TRIALS
from ...domain.entities import CoefficientField, EllipticOperator
from ...domain.exceptions import OperatorTooLargeError
from ..lattice import differentiate_columns
from .ellipticity import check_form_ellipticity, check_strong_ellipticity

logger = structlog.get_logger(__name__)

_COLUMN_CHUNK = 512


def assemble_matrix(coeffs: CoefficientField) -> np.ndarray:
    """
    Column j is L applied to the j-th lattice basis vector: spectral d^beta,
    pointwise a_{alpha,beta}, spectral d^alpha, sign (-1)^m.
    """
    grid = coeffs.grid
    if grid.total_points > DENSE_POINT_CAP:
        raise OperatorTooLargeError(grid.total_points, DENSE_POINT_CAP)
    size = grid.total_points
    indices = coeffs.indices
    weights = [[coeffs.tensor[i, j].reshape(-1)[:, None] for j in range(len(indices))]
               for i in range(len(indices))]
    matrix = np.zeros((size, size), dtype=np.complex128)
    for start in range(0, size, _COLUMN_CHUNK):
        stop = min(start + _COLUMN_CHUNK, size)
        basis = np.zeros((size, stop - start), dtype=np.complex128)
        basis[np.arange(start, stop), np.arange(stop - start)] = 1.0
        derivatives = [differentiate_columns(grid, beta, basis) for beta in indices]
        for i, alpha in enumerate(indices):
            inner = sum(weights[i][j] * derivatives[j] for j in range(len(indices)))
            matrix[:, start:stop] += differentiate_columns(grid, alpha, inner)
    return (-1) ** coeffs.m * matrix


def assemble(
    coeffs: CoefficientField,
    trials: int = DEFAULT_FORM_TRIALS,
    seed: int = DEFAULT_FORM_SEED,
) -> EllipticOperator:
    """Assemble the dense matrix and attach form and strong ellipticity metadata."""
    matrix = assemble_matrix(coeffs)
    op = EllipticOperator(
        coefficients=coeffs,
        matrix=matrix,
        form_estimate=check_form_ellipticity(coeffs, trials=trials, seed=seed),
        certificate=check_strong_ellipticity(coeffs),
    )
    logger.info(
        "operator_assembled",
        m=coeffs.m,
        grid=str(coeffs.grid),
        lambda0_hat=op.garding_lower,
        Lambda0_hat=op.form_upper,
        lambda1=op.pointwise_lower,
        type_angle=op.type_angle,
    )
    return op


def adjoint(op: EllipticOperator) -> EllipticOperator:
    """
    L* with a*_{alpha,beta} = conj(a_{beta,alpha}); the matrix is the conjugate
    transpose. Re a_0 and |a_0| are unchanged, so the metadata carries over.
    """
    return EllipticOperator(
        coefficients=op.coefficients.adjoint(),
        matrix=op.matrix.conj().T,
        form_estimate=op.form_estimate,
        certificate=op.certificate,
    )
