"""Smooth radial cutoff psi and its localized copies psi_{x,t}."""
import numpy as np

from ...domain.constants import CUTOFF_INNER_RADIUS, CUTOFF_OUTER_RADIUS
from ...domain.entities import CutoffDescriptor
from ...domain.value_objects import TorusGrid
from ..lattice import torus_distance

_PROFILE_SAMPLES = 20001


def make_cutoff_descriptor(
    order: int,
    inner: float = CUTOFF_INNER_RADIUS,
    outer: float = CUTOFF_OUTER_RADIUS,
) -> CutoffDescriptor:
    """
    Profile with sup |d^k profile/ds^k| for k = 0..order, measured once by
    repeated finite differences on a fine radial sample.
    """
    if order < 0:
        raise ValueError(f"Cutoff order must be >= 0, received: {order}")
    s = np.linspace(0.0, outer + 0.5, _PROFILE_SAMPLES)
    probe = CutoffDescriptor((0.0,), inner, outer)
    values = probe.profile(s)
    bounds = [float(np.max(np.abs(values)))]
    for _ in range(order):
        values = np.gradient(values, s)
        bounds.append(float(np.max(np.abs(values))))
    return CutoffDescriptor(tuple(bounds), inner, outer)


def localized_cutoff(descriptor: CutoffDescriptor, grid: TorusGrid, x, t: float) -> np.ndarray:
    """psi_{x,t}(z) = profile(|z - x| / t), == 1 on B(x, t), supported in B(x, 2t)."""
    if not t > 0:
        raise ValueError(f"Cutoff scale must be positive, received: {t}")
    return descriptor.profile(torus_distance(grid, x) / t)
