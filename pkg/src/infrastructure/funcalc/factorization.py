"""
Reusable factorization of L for the functional calculus.

Steps:
    1. complex Schur form L = Z T Z*
    2. cluster the diagonal of T (near-equal eigenvalues, plus the kernel)
    3. reorder T so every cluster is contiguous (adjacent Givens swaps)
    4. decouple the clusters with triangular Sylvester solves, T = S D S^{-1}

After step 4 any g(L) costs one block-diagonal evaluation between the
precomputed bases W = Z S and V = S^{-1} Z*.
"""
from typing import List, Tuple

import numpy as np
import structlog
from scipy.linalg import get_lapack_funcs, schur
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from ...domain.constants import (
    CLUSTER_TOLERANCE,
    FACTORIZATION_RESIDUAL_TOLERANCE,
    KERNEL_TOLERANCE,
)
from ...domain.entities import EllipticOperator, SpectralBlock, SpectralFactorization
from ...domain.exceptions import FactorizationError

logger = structlog.get_logger(__name__)


def cluster_labels(eigenvalues: np.ndarray, kernel_mask: np.ndarray, tol: float = CLUSTER_TOLERANCE) -> np.ndarray:
    """
    Connected components of the relation |a - b| <= tol * max(|a|, |b|).

    Kernel entries form one extra component. Labels are numbered by first
    appearance along the diagonal.
    """
    size = len(eigenvalues)
    labels = np.full(size, -1, dtype=int)
    live = np.flatnonzero(~kernel_mask)
    if live.size:
        values = eigenvalues[live]
        gap = np.abs(values[:, None] - values[None, :])
        scale = np.maximum(np.abs(values)[:, None], np.abs(values)[None, :])
        _, components = connected_components(csr_matrix(gap <= tol * scale), directed=False)
        labels[live] = components
    if kernel_mask.any():
        labels[kernel_mask] = labels.max() + 1

    renumbered = np.empty_like(labels)
    order = {}
    for i, label in enumerate(labels):
        renumbered[i] = order.setdefault(label, len(order))
    return renumbered


def _swap_adjacent(T: np.ndarray, Z: np.ndarray, j: int) -> None:
    """Exchange the diagonal entries j and j+1 of T in place, updating Z."""
    a, b, c = T[j, j], T[j, j + 1], T[j + 1, j + 1]
    x = np.array([b, c - a])
    x = x / np.linalg.norm(x)
    rotation = np.array([[x[0], -np.conj(x[1])], [x[1], np.conj(x[0])]])
    T[: j + 2, j:j + 2] = T[: j + 2, j:j + 2] @ rotation
    T[j:j + 2, j:] = rotation.conj().T @ T[j:j + 2, j:]
    Z[:, j:j + 2] = Z[:, j:j + 2] @ rotation
    T[j + 1, j] = 0.0


def reorder_clusters(T: np.ndarray, Z: np.ndarray, labels: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Insertion sort of the diagonal by cluster label; returns (T, Z, labels)."""
    T = T.copy()
    Z = Z.copy()
    labels = labels.copy()
    swaps = 0
    for i in range(1, len(labels)):
        j = i
        while j > 0 and labels[j - 1] > labels[j]:
            _swap_adjacent(T, Z, j - 1)
            labels[j - 1], labels[j] = labels[j], labels[j - 1]
            j -= 1
            swaps += 1
    logger.debug("schur_reordered", swaps=swaps)
    return T, Z, labels


def _block_ranges(labels: np.ndarray) -> List[Tuple[int, int]]:
    edges = np.flatnonzero(np.diff(labels)) + 1
    starts = np.concatenate(([0], edges))
    stops = np.concatenate((edges, [len(labels)]))
    return list(zip(starts.tolist(), stops.tolist()))


def decouple_blocks(T: np.ndarray, ranges: List[Tuple[int, int]]) -> Tuple[np.ndarray, np.ndarray]:
    """
    Block upper-triangular S with S^{-1} T S block diagonal; returns (S, S^{-1}).

    Block row J is cleared by X_J solving T_JJ X - X T[e:, e:] = -T[s:e, e:];
    the trailing part of T is untouched by earlier steps, so every solve uses
    the original T.
    """
    size = T.shape[0]
    S = np.eye(size, dtype=np.complex128)
    # S = prod (I + P_J) with P_K P_J = 0 for K > J, hence S^{-1} = I - sum P_J
    S_inv = np.eye(size, dtype=np.complex128)
    trsyl, = get_lapack_funcs(("trsyl",), (T,))
    for start, stop in ranges[:-1]:
        head = np.ascontiguousarray(T[start:stop, start:stop])
        tail = np.ascontiguousarray(T[stop:, stop:])
        rhs = -np.ascontiguousarray(T[start:stop, stop:])
        x, scale, info = trsyl(head, tail, rhs, isgn=-1)
        if info < 0:
            raise FactorizationError(float("inf"), FACTORIZATION_RESIDUAL_TOLERANCE)
        x = x / scale
        S[:, stop:] += S[:, start:stop] @ x
        S_inv[start:stop, stop:] = -x
    return S, S_inv


def factorize(op: EllipticOperator) -> SpectralFactorization:
    """
    Factorize L once for all matrix-function evaluations.

    Raises:
        FactorizationError: if ||Z T Z* - L||_F / ||L||_F exceeds 1e-10
    """
    matrix = np.asarray(op.matrix)
    T, Z = schur(matrix, output="complex")

    scale = float(np.linalg.norm(matrix))
    residual = float(np.linalg.norm(Z @ T @ Z.conj().T - matrix) / scale) if scale else 0.0
    if residual > FACTORIZATION_RESIDUAL_TOLERANCE:
        raise FactorizationError(residual, FACTORIZATION_RESIDUAL_TOLERANCE)

    eigenvalues = np.diag(T)
    kernel_mask = np.abs(eigenvalues) <= KERNEL_TOLERANCE * op.norm
    labels = cluster_labels(eigenvalues, kernel_mask)
    kernel_label = int(labels[kernel_mask][0]) if kernel_mask.any() else -1
    T, Z, labels = reorder_clusters(T, Z, labels)

    ranges = _block_ranges(labels)
    S, S_inv = decouple_blocks(T, ranges)

    diagonal = np.diag(T)
    blocks = tuple(
        SpectralBlock(
            start=start,
            stop=stop,
            center=complex(np.mean(diagonal[start:stop])),
            is_kernel=bool(labels[start] == kernel_label),
        )
        for start, stop in ranges
    )
    unitarity_defect = float(np.max(np.abs(Z.conj().T @ Z - np.eye(len(Z)))))

    fact = SpectralFactorization(
        source=op,
        triangular_factor=T,
        similarity=Z,
        residual=residual,
        kernel_dimension=int(np.count_nonzero(kernel_mask)),
        blocks=blocks,
        left_basis=Z @ S,
        right_basis=S_inv @ Z.conj().T,
        unitarity_defect=unitarity_defect,
    )
    logger.info("operator_factorized", grid=str(op.grid), m=op.m, **fact.summary())
    return fact
