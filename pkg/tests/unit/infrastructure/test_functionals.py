"""Unit tests for cones, tent fields and the registered square/maximal functionals."""
import math

import numpy as np
import pytest
from structlog.testing import capture_logs

from src.domain.exceptions import InvalidFunctionalError, InvalidSpectralArgumentError
from src.domain.value_objects import GridFunction, TorusGrid
from src.infrastructure.conegeo import (
    TentGenerator,
    a_functional,
    a_functional_field,
    build_cone_sampling,
    build_tent_field,
    default_time_grid,
    heat_levels,
    tent_energy_profile,
    tent_quasinorm,
)
from src.infrastructure.functionals import (
    MaximalKind,
    SquareKind,
    localized_cutoff,
    make_cutoff_descriptor,
    maximal_function,
    poincare_check,
    registered_functionals,
    resolve_functional,
    square_generator,
)
from src.infrastructure.lattice import lp_quasinorm

LAMBDA_1 = (2 * np.pi) ** 2


@pytest.mark.unit
class TestCones:

    def test_default_time_grid_starts_at_spacing(self, grid_1d):
        tg = default_time_grid(grid_1d)

        assert tg.t_min == grid_1d.spacing
        assert tg.t_max == 0.25
        assert tg.levels == 32

    def test_cone_grows_with_time(self, grid_2d, time_grid):
        cone = build_cone_sampling(grid_2d, time_grid, 1.0)

        counts = cone.counts
        assert counts[0] >= 1
        assert all(a <= b for a, b in zip(counts, counts[1:]))

    def test_clamped_levels_are_logged(self, grid_1d, time_grid):
        with capture_logs() as logs:
            build_cone_sampling(grid_1d, time_grid, 2.0)

        assert any(entry["event"] == "cone_levels_clamped" for entry in logs)


@pytest.mark.unit
class TestTentFields:

    def test_heat_levels_shape(self, laplacian_fact, mode_one, time_grid):
        levels = heat_levels(laplacian_fact, mode_one, 1, time_grid)

        assert levels.shape == (8, 16)

    def test_qk_generator_needs_positive_power(self):
        with pytest.raises(InvalidSpectralArgumentError):
            TentGenerator.qk(0)

    def test_gradient_field_on_mode(self, laplacian_fact, mode_one, time_grid):
        """|t nabla e^{-t^2 L} e^{2 pi i x}| = 2 pi t e^{-t^2 (2 pi)^2}."""
        field = build_tent_field(laplacian_fact, mode_one, TentGenerator.gradient(0), time_grid)

        for j, t in enumerate(time_grid.samples):
            expected = 2 * np.pi * t * math.exp(-t ** 2 * LAMBDA_1)
            assert np.allclose(field.level(j), expected, rtol=1e-9)

    def test_single_site_matches_field(self, random_fact, smooth_mean_zero, time_grid):
        field = build_tent_field(random_fact, smooth_mean_zero, TentGenerator.qk(1), time_grid)

        everywhere = a_functional_field(field, 1.0)

        assert a_functional(field, 1.0, (5,)) == pytest.approx(everywhere[5], rel=1e-12)

    def test_quasinorm_is_lp_of_field(self, random_fact, smooth_mean_zero, time_grid):
        field = build_tent_field(random_fact, smooth_mean_zero, TentGenerator.qk(1), time_grid)

        expected = lp_quasinorm(GridFunction(field.grid, a_functional_field(field, 1.0)), 0.8)

        assert tent_quasinorm(field, 0.8, 1.0) == pytest.approx(expected)

    def test_aperture_monotone(self, random_fact, smooth_mean_zero, time_grid):
        field = build_tent_field(random_fact, smooth_mean_zero, TentGenerator.qk(1), time_grid)

        narrow = a_functional_field(field, 1.0)
        wide = a_functional_field(field, 2.0)

        assert np.all(wide >= narrow - 1e-14)

    def test_energy_profile_rows(self, laplacian_fact, mode_one, time_grid):
        field = build_tent_field(laplacian_fact, mode_one, TentGenerator.semigroup(), time_grid)

        profile = tent_energy_profile(field)

        assert [row["level"] for row in profile] == list(range(8))
        assert profile[0]["energy"] == pytest.approx(math.exp(-2 * time_grid.t_min ** 2 * LAMBDA_1))


@pytest.mark.unit
class TestSquareAndMaximal:

    def test_registry_names(self):
        names = registered_functionals()

        for expected in ("S_L", "S_L_k2", "S_hL", "N_hL", "R_hL", "N_tilde_hL", "N_psi_hL", "identity"):
            assert expected in names

    def test_unknown_functional(self):
        with pytest.raises(InvalidFunctionalError):
            resolve_functional("S_unknown")

    def test_labels(self):
        assert resolve_functional("S_L").label == "S_L"
        assert resolve_functional("S_L", aperture=2.0).label == "S_L^2"
        assert resolve_functional("N_hL", scale=3.0).label == "3*N_hL"

    def test_vertical_square_needs_positive_power(self):
        with pytest.raises(InvalidFunctionalError):
            square_generator(SquareKind.VERTICAL, 0)

    def test_square_function_of_mode_is_constant(self, laplacian_fact, mode_one, time_grid):
        values = resolve_functional("S_L").evaluate(laplacian_fact, mode_one, time_grid).values.real

        assert np.allclose(values, values[0], rtol=1e-10)
        assert values[0] > 0

    def test_translation_equivariance(self, laplacian_fact, smooth_mean_zero, time_grid):
        shifted = GridFunction(smooth_mean_zero.grid, np.roll(smooth_mean_zero.values, 3))

        for name in ("S_L", "S_hL", "N_hL"):
            spec = resolve_functional(name)
            base = spec.evaluate(laplacian_fact, smooth_mean_zero, time_grid).values
            moved = spec.evaluate(laplacian_fact, shifted, time_grid).values
            assert np.allclose(np.roll(base, 3), moved, rtol=1e-8, atol=1e-12)

    @pytest.mark.parametrize("name", ["S_L", "S_hL", "N_hL", "R_hL", "N_psi_hL"])
    def test_homogeneity(self, random_fact, smooth_mean_zero, time_grid, name):
        spec = resolve_functional(name)

        base = spec.norm(random_fact, smooth_mean_zero, 1.0, time_grid)
        scaled = spec.norm(random_fact, smooth_mean_zero * (2 - 1j), 1.0, time_grid)

        assert scaled == pytest.approx(abs(2 - 1j) * base, rel=1e-9)

    def test_nontangential_dominates_radial(self, random_fact, smooth_mean_zero, time_grid):
        nontangential = maximal_function(random_fact, smooth_mean_zero, MaximalKind.NONTANGENTIAL, time_grid)
        radial = maximal_function(random_fact, smooth_mean_zero, MaximalKind.RADIAL, time_grid)

        assert np.all(nontangential.values.real >= radial.values.real - 1e-14)

    def test_gradient_kind_dominates_plain(self, bilaplacian_fact, smooth_mean_zero, time_grid):
        plain = maximal_function(bilaplacian_fact, smooth_mean_zero, MaximalKind.NONTANGENTIAL, time_grid)
        augmented = maximal_function(bilaplacian_fact, smooth_mean_zero, MaximalKind.NONTANGENTIAL_GRAD, time_grid)

        assert np.all(augmented.values.real >= plain.values.real - 1e-14)

    def test_cutoff_order_must_cover_m_minus_one(self, bilaplacian_fact, smooth_mean_zero, time_grid):
        with pytest.raises(InvalidFunctionalError):
            maximal_function(
                bilaplacian_fact, smooth_mean_zero, MaximalKind.CUTOFF, time_grid,
                cutoff=make_cutoff_descriptor(0),
            )


@pytest.mark.unit
class TestCutoff:

    def test_profile_plateau_and_support(self):
        descriptor = make_cutoff_descriptor(2)

        values = descriptor.profile(np.array([0.0, 0.5, 1.0, 2.0, 3.0]))

        assert values[:3].tolist() == [1.0, 1.0, 1.0]
        assert values[3:].tolist() == [0.0, 0.0]
        assert descriptor.order == 2
        assert descriptor.derivative_bounds[0] == pytest.approx(1.0)

    def test_localized_cutoff_support(self):
        grid = TorusGrid(1, 64)
        t = 4 * grid.spacing

        values = localized_cutoff(make_cutoff_descriptor(1), grid, (10,), t)

        assert values[10] == 1.0
        assert np.count_nonzero(values) <= 2 * 8

    def test_scale_must_be_positive(self, grid_1d):
        with pytest.raises(ValueError):
            localized_cutoff(make_cutoff_descriptor(1), grid_1d, (0,), 0.0)

    def test_poincare_step_holds_in_one_dimension(self):
        result = poincare_check(TorusGrid(1, 64), m=2, k=0, trials=10, seed=3)

        assert result["bound"] == 0.5
        assert result["passed"]
        assert len(result["samples"]) == 10

    def test_poincare_index_range(self):
        with pytest.raises(ValueError):
            poincare_check(TorusGrid(1, 64), m=2, k=2)
