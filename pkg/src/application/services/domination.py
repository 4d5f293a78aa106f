"""
One-sided bounds between functionals, their pointwise form and the lemma
ingredients (Sobolev interpolation, Poincare step, tent-space lemma).
"""
import math
from typing import Dict, List, Optional, Sequence

import numpy as np
import structlog

from ...domain.entities import ConstantBound, FunctionFamily, SpectralFactorization
from ...domain.value_objects import GridFunction, TimeGrid, TorusGrid
from ...infrastructure.conegeo import TentGenerator, a_functional_field, build_tent_field, tent_quasinorm
from ...infrastructure.functionals import FunctionalSpec, poincare_check, resolve_functional
from ...infrastructure.lattice import gradient_block
from ..factories import random_bandlimited
from .checks import InvariantCheck, flag_check, map_members, safe_ratio, upper_check
from .equivalence import NormTable, evaluate_norms

SOBOLEV_SLACK = 1e-9

logger = structlog.get_logger(__name__)


def constant_bound(
    name: str,
    statement: str,
    larger: NormTable,
    smaller: NormTable,
    p: float,
    threshold: Optional[float] = None,
) -> ConstantBound:
    """Implied C_j = ||A f_j||_p / ||B f_j||_p for ||A f|| <= C ||B f||."""
    constants = tuple(
        safe_ratio(float(a), float(b)) for a, b in zip(larger.column(p), smaller.column(p))
    )
    return ConstantBound(name, statement, constants, larger.labels, threshold)


def domination_bounds(
    fact: SpectralFactorization,
    family: FunctionFamily,
    exponents: Sequence[float],
    time_grid: TimeGrid,
    gamma: float = 8.0,
    gamma_sweep: Sequence[float] = (),
    max_workers: int = 1,
) -> List[ConstantBound]:
    """
    Per-member constants of:

    - S_L <= C S_hL and S_hL_k1 <= C S_L
    - S_hL <= C N_hL^gamma for gamma and every gamma of the sweep
    - for p >= 1: S_L <= C f, f <= C S_L, S_L_k2 <= C f, S_hL <= C f
    """
    specs: Dict[str, FunctionalSpec] = {
        name: resolve_functional(name) for name in ("S_L", "S_hL", "S_hL_k1", "S_L_k2", "identity")
    }
    apertures = sorted(set(gamma_sweep) | {gamma})
    for g in apertures:
        specs[f"N_hL^{g:g}"] = resolve_functional("N_hL", aperture=g)
    tables = {
        key: evaluate_norms(fact, spec, family, exponents, time_grid, max_workers)
        for key, spec in specs.items()
    }

    bounds: List[ConstantBound] = []
    for p in exponents:
        suffix = f"@p={p:g}"
        bounds.append(constant_bound("S_L<=C*S_hL" + suffix, "||S_L f||_p <= C ||S_hL f||_p", tables["S_L"], tables["S_hL"], p))
        bounds.append(constant_bound("S_hL_k1<=C*S_L" + suffix, "||S_hL_k1 f||_p <= C ||S_L f||_p", tables["S_hL_k1"], tables["S_L"], p))
        for g in apertures:
            bounds.append(constant_bound(
                f"S_hL<=C*N_hL^{g:g}" + suffix,
                f"||S_hL f||_p <= C ||N_hL^{g:g} f||_p",
                tables["S_hL"], tables[f"N_hL^{g:g}"], p,
            ))
        if p >= 1:
            identity = tables["identity"]
            bounds.append(constant_bound("S_L<=C*f" + suffix, "||S_L f||_p <= C ||f||_p", tables["S_L"], identity, p))
            bounds.append(constant_bound("f<=C*S_L" + suffix, "||f||_p <= C ||S_L f||_p", identity, tables["S_L"], p))
            bounds.append(constant_bound("S_L_k2<=C*f" + suffix, "||S_L_k2 f||_p <= C ||f||_p", tables["S_L_k2"], identity, p))
            bounds.append(constant_bound("S_hL<=C*f" + suffix, "||S_hL f||_p <= C ||f||_p", tables["S_hL"], identity, p))
    for bound in bounds:
        logger.debug("constant_bound_measured", name=bound.name, family_max=bound.family_max, finite=bound.finite)
    return bounds


def pointwise_geometric_mean(
    fact: SpectralFactorization,
    family: FunctionFamily,
    time_grid: TimeGrid,
    max_workers: int = 1,
) -> ConstantBound:
    """
    C0_j = max_x S_L f_j(x) / sqrt(S_hL^2 f_j(x) * S_L^2 f_j(x)), the
    superscript being the aperture; sites where S_L vanishes are ignored.
    """
    s_l = resolve_functional("S_L")
    s_hl_wide = resolve_functional("S_hL", aperture=2.0)
    s_l_wide = resolve_functional("S_L", aperture=2.0)

    def member_constant(f: GridFunction) -> Optional[float]:
        top = np.abs(s_l.evaluate(fact, f, time_grid).values)
        bottom = np.sqrt(
            np.abs(s_hl_wide.evaluate(fact, f, time_grid).values) * np.abs(s_l_wide.evaluate(fact, f, time_grid).values)
        )
        active = top > 0
        if not np.any(active):
            return None
        if np.any(bottom[active] == 0):
            return math.inf
        return float(np.max(top[active] / bottom[active]))

    constants = tuple(map_members(member_constant, family.members, max_workers))
    return ConstantBound(
        "pointwise_geometric_mean",
        "S_L f(x) <= C0 [S_hL^2 f(x)]^(1/2) [S_L^2 f(x)]^(1/2)",
        constants,
        tuple(family.labels),
    )


def interpolation_pairs(m: int) -> List[tuple]:
    """(k, j) with 0 < k < j <= max(m, 2)."""
    top = max(m, 2)
    return [(k, j) for j in range(2, top + 1) for k in range(1, j)]


def interpolation_check(grid: TorusGrid, k: int, j: int, trials: int = 20, seed: int = 0, band: int = 8) -> dict:
    """
    ||nabla^k f|| <= C ||nabla^j f||^{k/j} ||f||^{1-k/j} on the full torus for
    seeded band-limited mean-zero f; returns the largest implied C.
    """
    ratios = []
    for trial in range(trials):
        f = random_bandlimited(grid, band, seed + trial)
        low = math.sqrt(gradient_block(f, k).energy())
        high = math.sqrt(gradient_block(f, j).energy())
        bound = high ** (k / j) * f.l2_norm() ** (1 - k / j)
        ratios.append(low / bound if bound > 0 else 0.0)
    worst = float(max(ratios))
    logger.debug("interpolation_checked", k=k, j=j, max_constant=worst)
    return {"k": k, "j": j, "trials": trials, "max_constant": worst, "finite": math.isfinite(worst)}


def sobolev_checks(grid: TorusGrid, m: int, trials: int, seed: int) -> List[InvariantCheck]:
    """
    Interpolation constants (<= 1 in 1D by Hoelder on the Fourier side) and
    the Poincare step for every k < m.
    """
    checks = []
    for k, j in interpolation_pairs(m):
        result = interpolation_check(grid, k, j, trials, seed)
        name = f"sobolev_interpolation_k{k}_j{j}"
        if grid.n == 1:
            checks.append(upper_check(name, result["max_constant"] - 1.0, SOBOLEV_SLACK))
        else:
            checks.append(flag_check(name, result["finite"], result["max_constant"]))
    for k in range(m):
        result = poincare_check(grid, m, k, trials=trials, seed=seed)
        checks.append(flag_check(
            f"poincare_step_k{k}", result["passed"], result["max_ratio"], detail=f"bound={result['bound']:g}"
        ))
    return checks


def tent_lemma_check(
    fact: SpectralFactorization,
    f: GridFunction,
    time_grid: TimeGrid,
    exponents: Sequence[float],
    k_max: int = 4,
) -> dict:
    """
    Hypothesis A_k(F) <= C0 [A_{k+1}(G) A_{k+1}(F)]^{1/2} for k <= k_max, with
    A_k the A-functional at aperture 2^k, F the Q_1 field and G the
    gradient field of f; conclusion ||F||_{T^p} <= C1 ||G||_{T^p}.

    C1 is only declared verified when the hypothesis constant is finite.
    """
    F = build_tent_field(fact, f, TentGenerator.qk(1), time_grid)
    G = build_tent_field(fact, f, TentGenerator.gradient(0), time_grid)
    a_F = [a_functional_field(F, 2.0 ** k) for k in range(k_max + 2)]
    a_G = [a_functional_field(G, 2.0 ** k) for k in range(1, k_max + 2)]

    hypothesis = []
    for k in range(k_max + 1):
        top = a_F[k]
        bottom = np.sqrt(a_G[k] * a_F[k + 1])
        active = top > 0
        if not np.any(active):
            hypothesis.append(0.0)
        elif np.any(bottom[active] == 0):
            hypothesis.append(math.inf)
        else:
            hypothesis.append(float(np.max(top[active] / bottom[active])))
    c0 = max(hypothesis)
    conclusion = {}
    for p in exponents:
        ratio = safe_ratio(tent_quasinorm(F, p), tent_quasinorm(G, p))
        conclusion[p] = 0.0 if ratio is None else ratio
    hypothesis_holds = math.isfinite(c0)
    verified = hypothesis_holds and all(math.isfinite(c) for c in conclusion.values())
    return {
        "c0_per_k": hypothesis,
        "c0": c0,
        "hypothesis_holds": hypothesis_holds,
        "c1": conclusion,
        "verified": verified,
    }
