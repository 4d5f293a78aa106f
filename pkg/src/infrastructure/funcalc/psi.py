"""Psi-class symbols, sampled membership certificates and psi(t^{2m} L)."""
import math
from typing import Dict, Iterable, List, Optional

import numpy as np
import structlog

from ...domain.constants import PSI_MAGNITUDE_RANGE, PSI_MAGNITUDE_SAMPLES, PSI_RAY_COUNT
from ...domain.entities import PsiDescriptor, SpectralFactorization
from ...domain.exceptions import InvalidSpectralArgumentError, SectorMismatchError
from ...domain.value_objects import GridFunction
from .matrix_function import matrix_function
from .symbols import ExpFactor, PowerFactor, SpectralSymbol

logger = structlog.get_logger(__name__)

DEFAULT_PSI_SECTOR = 0.45 * math.pi


def power_exp_psi(k: int, mu: float = DEFAULT_PSI_SECTOR, beta: float = 1.0) -> PsiDescriptor:
    """
    psi(z) = z^k e^{-z}: alpha = k, any beta > 0.

    Bounded on the sector only for mu < pi/2.
    """
    if k < 1:
        raise InvalidSpectralArgumentError("k", k, "z^k e^{-z} is in Psi only for k >= 1")
    if not 0 < mu < math.pi / 2:
        raise InvalidSpectralArgumentError("mu", mu, "z^k e^{-z} needs 0 < mu < pi/2")
    symbol = SpectralSymbol((PowerFactor(0.0, 1.0, k), ExpFactor(1.0)), label=f"z^{k}e^-z")
    return PsiDescriptor(
        name=f"z^{k}e^-z",
        symbol=symbol,
        alpha=float(k),
        beta=float(beta),
        mu=mu,
        parameters={"k": k},
    )


def power_ratio_psi(a: float, b: float, mu: float = DEFAULT_PSI_SECTOR) -> PsiDescriptor:
    """psi(z) = z^a (1+z)^{-b}: alpha = a, beta = b - a."""
    if not 0 < a < b:
        raise InvalidSpectralArgumentError("(a, b)", (a, b), "z^a (1+z)^-b needs 0 < a < b")
    if not 0 < mu < math.pi:
        raise InvalidSpectralArgumentError("mu", mu, "sector half-angle must lie in (0, pi)")
    symbol = SpectralSymbol(
        (PowerFactor(0.0, 1.0, a), PowerFactor(1.0, 1.0, -b)),
        label=f"z^{a:g}(1+z)^-{b:g}",
    )
    return PsiDescriptor(
        name=f"z^{a:g}(1+z)^-{b:g}",
        symbol=symbol,
        alpha=float(a),
        beta=float(b - a),
        mu=mu,
        parameters={"a": a, "b": b},
    )


def membership_certificate(psi: PsiDescriptor) -> float:
    """
    Sampled C = max |psi(xi)| / min(|xi|^alpha, |xi|^-beta).

    Rays are equally spaced in [-mu, mu]; magnitudes log-spaced. A sampled
    certificate, not a proof.
    """
    low, high = PSI_MAGNITUDE_RANGE
    radii = np.logspace(np.log10(low), np.log10(high), PSI_MAGNITUDE_SAMPLES)
    angles = np.linspace(-psi.mu, psi.mu, PSI_RAY_COUNT)
    xi = radii[None, :] * np.exp(1j * angles[:, None])
    with np.errstate(over="ignore", invalid="ignore"):
        values = np.abs(psi.symbol.evaluate(xi))
        envelope = np.minimum(radii ** psi.alpha, radii ** (-psi.beta))[None, :]
        ratio = values / envelope
    if not np.all(np.isfinite(ratio)):
        return float("inf")
    return float(np.max(ratio))


def certify(psi: PsiDescriptor) -> PsiDescriptor:
    constant = membership_certificate(psi)
    logger.debug("psi_certificate", psi=psi.name, mu=psi.mu, constant=constant)
    return psi.with_certificate(constant)


def _check_sector(fact: SpectralFactorization, psi: PsiDescriptor) -> None:
    omega = fact.source.type_angle
    if psi.mu <= omega:
        raise SectorMismatchError(psi.mu, omega)


def psi_calculus(fact: SpectralFactorization, psi: PsiDescriptor, t: float, f: GridFunction) -> GridFunction:
    """
    Q_psi(f)(., t) = psi(t^{2m} L) f.

    Raises:
        SectorMismatchError: if mu <= omega(L)
    """
    _check_sector(fact, psi)
    if not t > 0:
        raise InvalidSpectralArgumentError("t", t, "psi calculus needs t > 0")
    return matrix_function(fact, psi.symbol.rescaled(t ** (2 * fact.m)))(f)


def psi_norm_profile(
    fact: SpectralFactorization,
    psi: PsiDescriptor,
    times: Iterable[float],
) -> Dict[str, object]:
    """
    ||psi(t^{2m} L)||_{2->2} over sampled t.

    The lattice L^2 norm is h^n times the Euclidean one, so the operator
    norm is the matrix 2-norm.
    """
    _check_sector(fact, psi)
    samples: List[Dict[str, float]] = []
    for t in times:
        dense = matrix_function(fact, psi.symbol.rescaled(t ** (2 * fact.m))).dense()
        samples.append({"t": float(t), "norm": float(np.linalg.norm(dense, 2))})
    norms = [s["norm"] for s in samples]
    peak: Optional[float] = max(norms) if norms else None
    return {
        "psi": psi.name,
        "samples": samples,
        "max_norm": peak,
        "finite": bool(norms) and bool(np.all(np.isfinite(norms))),
    }
