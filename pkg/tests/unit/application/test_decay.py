"""Unit tests for the off-diagonal decay fit."""
import math

import numpy as np
import pytest

from src.application.services import fit_decay_exponent, gaffney_check, target_exponent
from src.application.services.decay import patch_sets, restricted_norm
from src.domain.exceptions import StudyPreconditionError
from src.domain.value_objects import TorusGrid
from src.infrastructure.elliptic import assemble, polyharmonic_coefficients
from src.infrastructure.funcalc import factorize


@pytest.mark.unit
class TestDecayFit:

    @pytest.mark.parametrize("m, expected", [(1, 2.0), (2, 4.0 / 3.0), (3, 1.2)])
    def test_target_exponent(self, m, expected):
        assert target_exponent(m) == pytest.approx(expected)

    def test_recovers_exponent_of_synthetic_profile(self):
        rho = np.linspace(0.5, 6.0, 25)
        log_n = 0.3 + 0.5 * np.log(1.0 / rho) - 0.25 * rho ** 1.5

        q_hat, residual = fit_decay_exponent(rho, log_n)

        assert q_hat == pytest.approx(1.5, abs=1e-3)
        assert residual < 1e-6

    def test_restricted_norm_of_diagonal_block(self):
        block = np.diag([3.0, 1.0, 0.5])

        value = restricted_norm(block, probes=3, rng=np.random.default_rng(0))

        assert value == pytest.approx(3.0, rel=1e-3)
        assert value <= 3.0 + 1e-12

    def test_empty_block(self):
        assert restricted_norm(np.zeros((0, 4)), 2, np.random.default_rng(0)) == 0.0

    def test_patches_must_fit_in_torus(self):
        with pytest.raises(StudyPreconditionError):
            patch_sets(TorusGrid(1, 32), (16,), 0.2, 0.3)


@pytest.mark.unit
@pytest.mark.slow
class TestGaffneyCheck:

    def test_heat_kernel_decays_like_a_gaussian(self):
        fact = factorize(assemble(polyharmonic_coefficients(1, TorusGrid(1, 64)), trials=5))

        fit = gaffney_check(
            fact,
            separations=[0.04, 0.08, 0.12, 0.16, 0.2, 0.24],
            scales=[0.03, 0.045, 0.06],
            probes=3,
        )

        assert not fit.degenerate
        assert fit.monotone
        assert fit.q_target == 2.0
        assert math.isfinite(fit.q_hat)
        assert abs(fit.q_hat - 2.0) / 2.0 <= 0.3
