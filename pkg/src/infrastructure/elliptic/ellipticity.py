"""Ellipticity validators: pointwise strong-ellipticity scan and randomized form probing."""
from typing import List, Tuple, Union

import numpy as np
import structlog

from ...domain.constants import DEFAULT_FORM_SEED, DEFAULT_FORM_TRIALS
from ...domain.entities import (
    CoefficientField,
    EllipticityCertificate,
    EllipticOperator,
    FormEstimate,
)
from ...domain.value_objects import GridFunction, TorusGrid
from ..lattice import gradient_block, integer_frequencies

logger = structlog.get_logger(__name__)


def check_strong_ellipticity(coeffs: CoefficientField) -> EllipticityCertificate:
    """
    lambda_1 = min over sites of the smallest eigenvalue of the Hermitian part
    of the D_m x D_m matrix [a_{alpha,beta}(x)].

    A non-positive minimum is returned as an uncertified report naming the site.
    """
    matrices = coeffs.pointwise_matrices()
    hermitian = 0.5 * (matrices + np.conj(np.swapaxes(matrices, 1, 2)))
    smallest = np.linalg.eigvalsh(hermitian)[:, 0]
    worst = int(np.argmin(smallest))
    certificate = EllipticityCertificate(
        lambda1=float(smallest[worst]),
        worst_site=coeffs.grid.site_from_index(worst),
    )
    if not certificate.certified:
        logger.warning(
            "strong_ellipticity_failed",
            lambda1=certificate.lambda1,
            worst_site=certificate.worst_site,
        )
    return certificate


def _gradient_components(f: GridFunction, m: int) -> np.ndarray:
    return np.stack([c.values for c in gradient_block(f, m).components])


def form_from_gradients(coeffs: CoefficientField, grad_f: np.ndarray, grad_g: np.ndarray) -> complex:
    """a_0 given stacked d^beta f and d^alpha g (lexicographic order)."""
    axes = "".join("xyz"[: coeffs.grid.n])
    total = np.einsum(f"ij{axes},j{axes},i{axes}->", coeffs.tensor, grad_f, np.conj(grad_g))
    return complex(coeffs.grid.cell_volume * total)


def sesquilinear_form(
    target: Union[EllipticOperator, CoefficientField],
    f: GridFunction,
    g: GridFunction,
) -> complex:
    """a_0(f, g) = sum_{alpha,beta} h^n sum_x a_{alpha,beta}(x) d^beta f(x) conj(d^alpha g(x))."""
    coeffs = target.coefficients if isinstance(target, EllipticOperator) else target
    return form_from_gradients(
        coeffs, _gradient_components(f, coeffs.m), _gradient_components(g, coeffs.m)
    )


def random_probe(grid: TorusGrid, rng: np.random.Generator) -> GridFunction:
    """
    Mean-zero band-limited probe with a random spectral slope.

    Slopes in [0, 3] move the energy between low and Nyquist frequencies.
    """
    k = integer_frequencies(grid)
    radius = np.sqrt(sum(kk ** 2 for kk in np.meshgrid(*([k] * grid.n), indexing="ij")))
    slope = rng.uniform(0.0, 3.0)
    spectrum = (rng.standard_normal(grid.shape) + 1j * rng.standard_normal(grid.shape))
    spectrum = spectrum / (1.0 + radius) ** slope
    spectrum.reshape(-1)[0] = 0.0
    return GridFunction(grid, np.fft.ifftn(spectrum))


def check_form_ellipticity(
    target: Union[EllipticOperator, CoefficientField],
    trials: int = DEFAULT_FORM_TRIALS,
    seed: int = DEFAULT_FORM_SEED,
) -> FormEstimate:
    """
    lambda0_hat = min Re a_0(f,f)/||nabla^m f||^2 and
    Lambda0_hat = max |a_0(f,g)|/(||nabla^m f|| ||nabla^m g||) over seeded probes.

    Lambda0_hat runs over every ordered pair, diagonal included, so
    lambda0_hat <= Lambda0_hat.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, received: {trials}")
    coeffs = target.coefficients if isinstance(target, EllipticOperator) else target
    rng = np.random.default_rng(seed)
    grads: List[np.ndarray] = []
    energies: List[float] = []
    for _ in range(trials):
        probe = random_probe(coeffs.grid, rng)
        grad = _gradient_components(probe, coeffs.m)
        grads.append(grad)
        energies.append(float(coeffs.grid.cell_volume * np.sum(np.abs(grad) ** 2)))

    # forms[s, t] = a_0(f_t, f_s) for every ordered pair of test functions
    axes = "".join("xyz"[: coeffs.grid.n])
    stacked = np.stack(grads)
    applied = np.einsum(f"ij{axes},tj{axes}->ti{axes}", coeffs.tensor, stacked)
    forms = coeffs.grid.cell_volume * (np.conj(stacked.reshape(trials, -1)) @ applied.reshape(trials, -1).T)
    norms = np.sqrt(np.asarray(energies))
    lower = float(np.min(np.diag(forms).real / norms ** 2))
    upper = float(np.max(np.abs(forms) / np.outer(norms, norms)))

    estimate = FormEstimate(float(lower), float(upper), trials, seed)
    if not estimate.is_elliptic:
        logger.warning("form_ellipticity_failed", lambda0_hat=estimate.lambda0_hat)
    else:
        logger.debug(
            "form_constants_measured",
            lambda0_hat=estimate.lambda0_hat,
            Lambda0_hat=estimate.Lambda0_hat,
            trials=trials,
            seed=seed,
        )
    return estimate


def hermitian_part_min_eigenvalue(op: EllipticOperator) -> float:
    """Smallest eigenvalue of (L + L*)/2; accretivity means >= -1e-10 ||L||."""
    matrix = op.matrix
    return float(np.linalg.eigvalsh(0.5 * (matrix + matrix.conj().T))[0])


def operator_norm(op: EllipticOperator) -> float:
    return op.norm


def sector_violation(eigenvalues: np.ndarray, omega: float, scale: float) -> Tuple[float, int]:
    """
    Largest excess of |arg z| over omega among non-kernel eigenvalues.

    Returns (excess, count_checked); kernel values are |z| <= 1e-10 * scale.
    """
    eigenvalues = np.asarray(eigenvalues)
    nonzero = eigenvalues[np.abs(eigenvalues) > 1e-10 * scale]
    if nonzero.size == 0:
        return 0.0, 0
    excess = float(np.max(np.abs(np.angle(nonzero)) - omega))
    return excess, int(nonzero.size)
