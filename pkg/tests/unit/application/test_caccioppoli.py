"""Unit tests for the parabolic Caccioppoli measurements."""
import math

import numpy as np
import pytest
from scipy.integrate import quad

from src.application.factories import fourier_mode
from src.application.services import caccioppoli_check, max_constants, random_configs, refinement_drift, run_configs
from src.application.services.caccioppoli import CaccioppoliConfig, time_nodes
from src.domain.entities import CaccioppoliResult
from src.domain.exceptions import StudyPreconditionError
from src.domain.value_objects import TorusGrid
from src.infrastructure.elliptic import assemble, polyharmonic_coefficients
from src.infrastructure.funcalc import factorize
from src.infrastructure.lattice import ball_indices

X0 = (32,)
R = 0.05
T0 = 0.2


@pytest.fixture(scope="module")
def grid_64():
    return TorusGrid(1, 64)


@pytest.fixture(scope="module")
def laplacian_64(grid_64):
    return factorize(assemble(polyharmonic_coefficients(1, grid_64), trials=5))


def _time_integral(fn, a, b):
    value, _ = quad(fn, a, b, epsabs=0.0, epsrel=1e-12)
    return value


@pytest.mark.unit
class TestCaccioppoliCheck:

    def test_single_mode_matches_scalar_integrals(self, grid_64, laplacian_64):
        """u = e^{-4 pi^2 t^2} e^{2 pi i x}: both sides reduce to time integrals times ball measures."""
        f = fourier_mode(grid_64, 1)
        lam = (2 * math.pi) ** 2
        inner = len(ball_indices(grid_64, X0, R)) * grid_64.cell_volume
        outer = len(ball_indices(grid_64, X0, 2 * R)) * grid_64.cell_volume
        energy = lambda t: math.exp(-2 * lam * t * t)

        expected_lhs = lam * _time_integral(energy, T0 - R, T0 + R) * inner
        expected_rhs = R ** -2 * _time_integral(energy, T0 - 2 * R, T0 + 2 * R) * outer

        result = caccioppoli_check(laplacian_64, f, X0, R, T0, "ineq3", time_samples=64)

        assert result.lhs == pytest.approx(expected_lhs, rel=1e-2)
        assert result.rhs_without_constant == pytest.approx(expected_rhs, rel=1e-2)
        assert result.implied_constant == pytest.approx(expected_lhs / expected_rhs, rel=2e-2)

    def test_lower_order_variant_coincides_for_second_order(self, grid_64, laplacian_64):
        f = fourier_mode(grid_64, 3)

        ineq2 = caccioppoli_check(laplacian_64, f, X0, R, T0, "ineq2")
        ineq3 = caccioppoli_check(laplacian_64, f, X0, R, T0, "ineq3")

        assert ineq2.implied_constant == pytest.approx(ineq3.implied_constant, rel=1e-12)

    def test_absorbed_variant_is_smaller(self, grid_64, laplacian_64):
        f = fourier_mode(grid_64, 2)

        ineq1 = caccioppoli_check(laplacian_64, f, X0, R, T0, "ineq1", epsilon=0.5)
        ineq3 = caccioppoli_check(laplacian_64, f, X0, R, T0, "ineq3")

        assert ineq1.epsilon == 0.5
        assert ineq3.epsilon is None
        assert 0.0 <= ineq1.implied_constant <= ineq3.implied_constant

    @pytest.mark.parametrize(
        "r, t0, samples, variant",
        [(0.05, 0.15, 64, "ineq3"), (0.3, 1.0, 64, "ineq3"), (0.05, 0.2, 8, "ineq3"), (0.05, 0.2, 64, "ineq9")],
    )
    def test_preconditions(self, grid_64, laplacian_64, r, t0, samples, variant):
        with pytest.raises(StudyPreconditionError):
            caccioppoli_check(laplacian_64, fourier_mode(grid_64, 1), X0, r, t0, variant, time_samples=samples)

    def test_inner_window_is_half_the_nodes(self):
        nodes, width, inner = time_nodes(T0, R, 64)

        assert width == pytest.approx(4 * R / 64)
        assert inner.sum() == 32
        assert nodes[0] == pytest.approx(T0 - 2 * R + width / 2)


@pytest.mark.unit
class TestCaccioppoliFamilies:

    def test_random_configs_respect_box_constraints(self, grid_64):
        configs = random_configs(grid_64, 10, seed=4)

        assert len(configs) == 10
        for config in configs:
            assert 4 * grid_64.spacing <= config.r <= 0.1
            assert config.t0 > 3 * config.r

    def test_coarse_grid_rejected(self, grid_1d):
        with pytest.raises(StudyPreconditionError):
            random_configs(grid_1d, 3, seed=0)

    def test_refined_config_keeps_physical_point(self):
        assert CaccioppoliConfig((5,), 0.07, 0.4, 1).refined() == CaccioppoliConfig((10,), 0.07, 0.4, 1)

    def test_run_configs_and_family_max(self, grid_64, laplacian_64):
        results = run_configs(laplacian_64, random_configs(grid_64, 2, seed=1), ["ineq1", "ineq3"], 0.5, 32, band=4)

        assert len(results) == 4
        constants = max_constants(results)
        assert set(constants) == {"ineq1", "ineq3"}
        assert all(np.isfinite(list(constants.values())))

    def test_refinement_drift(self):
        drift = refinement_drift({"ineq1": 2.0, "ineq3": 0.0}, {"ineq1": 1.0, "ineq3": 1.0})

        assert drift == {"ineq1": 2.0, "ineq3": None}

    def test_max_constants_per_variant(self):
        results = [
            CaccioppoliResult("ineq3", (0,), 0.1, 0.5, 1.0, 2.0, c) for c in (0.5, 3.0, 1.0)
        ]

        assert max_constants(results) == {"ineq3": 3.0}
