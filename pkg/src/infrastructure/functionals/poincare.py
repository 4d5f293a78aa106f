"""Poincare step for functions supported in B(x, 2t)."""
from typing import Dict, List

import numpy as np
import structlog

from ...domain.entities import CutoffDescriptor
from ...domain.value_objects import GridFunction, TorusGrid
from ..elliptic import random_probe
from ..lattice import gradient_block
from .cutoff import localized_cutoff, make_cutoff_descriptor

logger = structlog.get_logger(__name__)


def poincare_bound(m: int, k: int) -> float:
    """Constant 2^{k-m+1} of ||nabla^k v||^2 <= C (2t)^{2(m-1-k)} ||nabla^{m-1} v||^2."""
    return 2.0 ** (k - m + 1)


def poincare_check(
    grid: TorusGrid,
    m: int,
    k: int,
    trials: int = 20,
    seed: int = 0,
    cutoff: CutoffDescriptor = None,
) -> Dict[str, object]:
    """
    Measure ||nabla^k v||^2 / ((2t)^{2(m-1-k)} ||nabla^{m-1} v||^2) for
    v = psi_{x,t} u with random band-limited u, at random (x, t) with
    B(x, 2t) inside the injectivity radius.
    """
    if not 0 <= k <= m - 1:
        raise ValueError(f"Poincare step needs 0 <= k <= m-1, received k={k}, m={m}")
    cutoff = cutoff or make_cutoff_descriptor(m)
    rng = np.random.default_rng(seed)
    t_low = 3 * grid.spacing
    t_high = 0.12
    if t_low >= t_high:
        raise ValueError(f"grid {grid} too coarse for supported test functions")
    rows: List[Dict[str, float]] = []
    for _ in range(trials):
        x = tuple(int(c) for c in rng.integers(0, grid.points_per_axis, size=grid.n))
        t = float(rng.uniform(t_low, t_high))
        u = random_probe(grid, rng)
        v = GridFunction(grid, localized_cutoff(cutoff, grid, x, t) * u.values)
        lower = gradient_block(v, k).energy()
        upper = gradient_block(v, m - 1).energy()
        ratio = lower / ((2 * t) ** (2 * (m - 1 - k)) * upper) if upper > 0 else 0.0
        rows.append({"x": list(x), "t": t, "ratio": float(ratio)})
    bound = poincare_bound(m, k)
    worst = max(r["ratio"] for r in rows)
    result = {
        "m": m,
        "k": k,
        "bound": bound,
        "max_ratio": worst,
        "passed": worst <= 1.1 * bound,
        "samples": rows,
    }
    logger.debug("poincare_checked", m=m, k=k, max_ratio=worst, bound=bound)
    return result
