"""Coefficient field constructors."""
from itertools import product
from math import factorial

import numpy as np
import structlog

from ...domain.constants import COEFFICIENT_BANDWIDTH
from ...domain.entities import CoefficientField
from ...domain.exceptions import EllipticityError, ShapeMismatchError
from ...domain.value_objects import MultiIndex, TorusGrid

logger = structlog.get_logger(__name__)


def polyharmonic_weights(n: int, m: int) -> np.ndarray:
    """Multinomial weights m!/alpha! in lexicographic multi-index order."""
    return np.array([factorial(m) / alpha.factorial for alpha in MultiIndex.of_order(n, m)])


def polyharmonic_coefficients(m: int, grid: TorusGrid) -> CoefficientField:
    """
    Diagonal tensor a_{alpha,alpha} = m!/alpha!, so the symbol is |xi|^{2m}
    and L = (-Delta)^m exactly.
    """
    if m < 1:
        raise ValueError(f"Half-order m must be >= 1, received: {m}")
    weights = polyharmonic_weights(grid.n, m)
    size = len(weights)
    tensor = np.zeros((size, size) + grid.shape, dtype=np.complex128)
    for i, w in enumerate(weights):
        tensor[i, i] = w
    return CoefficientField(m, grid, tensor)


def constant_coefficients(m: int, grid: TorusGrid, matrix: np.ndarray) -> CoefficientField:
    """Spatially constant tensor given as a D x D matrix."""
    matrix = np.asarray(matrix, dtype=np.complex128)
    tensor = np.broadcast_to(matrix.reshape(matrix.shape + (1,) * grid.n), matrix.shape + grid.shape)
    return CoefficientField(m, grid, tensor)


def _band(grid: TorusGrid, bandwidth: int) -> list:
    limit = min(bandwidth, grid.points_per_axis // 2 - 1)
    return list(product(range(-limit, limit + 1), repeat=grid.n))


def random_elliptic_coefficients(
    m: int,
    grid: TorusGrid,
    delta: float,
    seed: int,
    bandwidth: int = COEFFICIENT_BANDWIDTH,
) -> CoefficientField:
    """
    a(x) = A_0 + delta * P(x) with A_0 the polyharmonic diagonal and
    P(x) = sum_k c_k e^{2 pi i k.x} / sum_k ||c_k||_2 a smooth complex tensor.

    The triangle inequality gives ||P(x)||_2 <= 1 at every x, hence
    lambda_1 >= 1 - delta. The Fourier coefficients depend only on (seed,
    bandwidth), so the same field is sampled on N and 2N.
    """
    if not 0 <= delta < 1:
        raise EllipticityError("0 <= delta < 1", float(delta))
    base = polyharmonic_coefficients(m, grid)
    if delta == 0:
        return base

    size = base.size
    modes = list(product(range(-bandwidth, bandwidth + 1), repeat=grid.n))
    rng = np.random.default_rng(seed)
    draws = rng.standard_normal((len(modes), size, size)) + 1j * rng.standard_normal((len(modes), size, size))
    decay = np.array([1.0 / (1.0 + float(np.dot(k, k))) for k in modes])
    draws = draws * decay[:, None, None]
    normalizer = float(sum(np.linalg.norm(c, 2) for c in draws))

    resolvable = set(_band(grid, bandwidth))
    if len(resolvable) < len(modes):
        logger.warning(
            "coefficient_band_truncated",
            bandwidth=bandwidth,
            points_per_axis=grid.points_per_axis,
        )

    axes = np.meshgrid(*([np.arange(grid.points_per_axis) * grid.spacing] * grid.n), indexing="ij")
    field = np.zeros((size, size) + grid.shape, dtype=np.complex128)
    for k, c in zip(modes, draws):
        if k not in resolvable:
            continue
        phase = np.exp(2j * np.pi * sum(kj * xj for kj, xj in zip(k, axes)))
        field += c.reshape((size, size) + (1,) * grid.n) * phase
    tensor = base.tensor + (delta / normalizer) * field
    logger.debug("random_coefficients_built", m=m, grid=str(grid), delta=delta, seed=seed)
    return CoefficientField(m, grid, tensor)


def _upsample_axis(spectrum: np.ndarray, axis: int, n_src: int, n_tgt: int) -> np.ndarray:
    shape = list(spectrum.shape)
    shape[axis] = n_tgt
    out = np.zeros(shape, dtype=np.complex128)
    src = np.moveaxis(spectrum, axis, 0)
    dst = np.moveaxis(out, axis, 0)
    for i, k in enumerate(np.fft.fftfreq(n_src, d=1.0 / n_src).astype(int)):
        if 2 * abs(k) == n_src:
            # Nyquist mode splits evenly between +-N/2
            dst[k % n_tgt] += 0.5 * src[i]
            dst[-k % n_tgt] += 0.5 * src[i]
        else:
            dst[k % n_tgt] += src[i]
    return out


def resample_coefficients(coeffs: CoefficientField, grid: TorusGrid) -> CoefficientField:
    """
    Trigonometric interpolation of a coefficient field onto a finer grid.

    The target N must be a multiple of the source N; band-limited fields
    (e.g. random_elliptic_coefficients) come out equal to a direct sampling.
    """
    source = coeffs.grid
    if grid.n != source.n:
        raise ShapeMismatchError(f"dimension {source.n}", grid.n)
    n_src, n_tgt = source.points_per_axis, grid.points_per_axis
    if n_tgt % n_src:
        raise ShapeMismatchError(f"N multiple of {n_src}", n_tgt)
    if n_tgt == n_src:
        return CoefficientField(coeffs.m, grid, coeffs.tensor.copy())

    axes = tuple(range(2, 2 + grid.n))
    spectrum = np.fft.fftn(coeffs.tensor, axes=axes, norm="forward")
    for axis in axes:
        spectrum = _upsample_axis(spectrum, axis, n_src, n_tgt)
    tensor = np.fft.ifftn(spectrum, axes=axes, norm="forward")
    logger.debug("coefficients_resampled", m=coeffs.m, source=str(source), target=str(grid))
    return CoefficientField(coeffs.m, grid, tensor)
