"""Unit tests for Hardy quasi-norms, molecules and the reproducing formula."""
import math

import numpy as np
import pytest
from structlog.testing import capture_logs

from src.domain.exceptions import (
    KernelObstructionError,
    MoleculeConstructionError,
    MoleculePreconditionError,
)
from src.domain.value_objects import Ball, GridFunction, TimeGrid, TorusGrid
from src.infrastructure.elliptic import assemble, polyharmonic_coefficients
from src.infrastructure.funcalc import factorize
from src.infrastructure.hardy import (
    calderon_constant,
    calderon_reproduce,
    generate_molecule,
    hardy_quasinorm,
    molecular_representation,
    molecule_sum,
    reproduction_error,
    verify_molecule,
)


@pytest.fixture
def fine_laplacian():
    """-Delta on T^1 with N = 64: room for two faithful annuli around r = 1/16."""
    return assemble(polyharmonic_coefficients(1, TorusGrid(1, 64)), trials=10)


@pytest.fixture
def wide_time_grid():
    return TimeGrid(1e-3, 10.0, 200)


@pytest.mark.unit
class TestCalderon:

    @pytest.mark.parametrize("M, m", [(0, 1), (2, 1), (1, 2), (3, 3)])
    def test_constant_matches_gamma_closed_form(self, M, m):
        expected = 2 * m * 2 ** (M + 2) / math.gamma(M + 2)

        assert calderon_constant(M, m) == pytest.approx(expected, rel=1e-9)

    def test_reproduces_mean_zero_functions(self, laplacian_fact, smooth_mean_zero, wide_time_grid):
        assert reproduction_error(laplacian_fact, smooth_mean_zero, 2, wide_time_grid) <= 1e-3

    def test_reproduces_for_complex_operator(self, random_fact, smooth_mean_zero, wide_time_grid):
        assert reproduction_error(random_fact, smooth_mean_zero, 1, wide_time_grid) <= 1e-3

    def test_rejects_constants(self, laplacian_fact, grid_1d, wide_time_grid):
        with pytest.raises(KernelObstructionError):
            calderon_reproduce(laplacian_fact, GridFunction.constant(grid_1d, 1.0), 2, wide_time_grid)

    def test_negative_order(self, laplacian_fact, smooth_mean_zero, wide_time_grid):
        with pytest.raises(ValueError):
            calderon_reproduce(laplacian_fact, smooth_mean_zero, -1, wide_time_grid)


@pytest.mark.unit
class TestHardyQuasinorm:

    def test_positive_on_nonzero_input(self, laplacian_fact, smooth_mean_zero, time_grid):
        for p in (0.8, 1.0, 2.0):
            assert hardy_quasinorm(laplacian_fact, smooth_mean_zero, p, time_grid) > 0

    def test_mean_is_projected_with_warning(self, laplacian_fact, smooth_mean_zero, time_grid):
        shifted = smooth_mean_zero + GridFunction.constant(smooth_mean_zero.grid, 5.0)

        with capture_logs() as logs:
            value = hardy_quasinorm(laplacian_fact, shifted, 1.0, time_grid)

        assert value == pytest.approx(hardy_quasinorm(laplacian_fact, smooth_mean_zero, 1.0, time_grid))
        assert any(entry["event"] == "hardy_quasinorm_mean_subtracted" for entry in logs)


@pytest.mark.unit
class TestMolecules:

    def test_generated_molecule_is_verified(self, fine_laplacian):
        molecule = generate_molecule(fine_laplacian, Ball((32,), 1.0 / 16), p=1.0, M=1, epsilon=1.0, seed=5)

        assert molecule.is_verified
        assert molecule.worst_bound == pytest.approx(1.0)
        assert molecule.max_ring == 2
        assert molecule.achieved_bounds.shape == (2, 3)

    def test_molecule_is_seeded(self, fine_laplacian):
        ball = Ball((20,), 1.0 / 16)

        first = generate_molecule(fine_laplacian, ball, 1.0, 1, 1.0, seed=9)
        second = generate_molecule(fine_laplacian, ball, 1.0, 1, 1.0, seed=9)

        assert np.array_equal(first.sample.values, second.sample.values)

    def test_verify_recomputes_table(self, fine_laplacian):
        molecule = generate_molecule(fine_laplacian, Ball((32,), 1.0 / 16), 1.0, 1, 1.0, seed=2)

        table = verify_molecule(
            fine_laplacian, molecule.sample, molecule.witness, molecule.ball, 1.0, 1, 1.0
        )

        assert np.allclose(table, molecule.achieved_bounds, rtol=1e-10)

    def test_doubled_molecule_fails_verification(self, fine_laplacian):
        molecule = generate_molecule(fine_laplacian, Ball((32,), 1.0 / 16), 1.0, 1, 1.0, seed=2)

        table = verify_molecule(
            fine_laplacian, molecule.sample * 2.0, molecule.witness * 2.0, molecule.ball, 1.0, 1, 1.0
        )

        assert np.max(table) == pytest.approx(2.0)

    @pytest.mark.parametrize("p, M, epsilon", [(1.5, 1, 1.0), (0.0, 1, 1.0), (1.0, 0, 1.0), (1.0, 1, 0.0)])
    def test_preconditions(self, fine_laplacian, p, M, epsilon):
        with pytest.raises(MoleculePreconditionError):
            generate_molecule(fine_laplacian, Ball((32,), 1.0 / 16), p, M, epsilon, seed=0)

    def test_order_must_beat_threshold(self, fine_laplacian):
        """n/(2m)(1/p - 1/2) = 2.25 for p = 0.2 in one dimension."""
        with pytest.raises(MoleculePreconditionError):
            generate_molecule(fine_laplacian, Ball((32,), 1.0 / 16), 0.2, 2, 1.0, seed=0)

    def test_radius_below_four_spacings(self, fine_laplacian):
        with pytest.raises(MoleculePreconditionError):
            generate_molecule(fine_laplacian, Ball((32,), 2.0 / 64), 1.0, 1, 1.0, seed=0)

    def test_ball_too_large_for_two_rings(self, fine_laplacian):
        with pytest.raises(MoleculeConstructionError):
            generate_molecule(fine_laplacian, Ball((32,), 0.2), 1.0, 1, 1.0, seed=0)

    def test_molecule_sum_of_representation(self, fine_laplacian):
        fact = factorize(fine_laplacian)
        molecules = [
            generate_molecule(fine_laplacian, Ball((c,), 1.0 / 16), 1.0, 1, 1.0, seed=c)
            for c in (8, 40)
        ]
        representation = molecular_representation(molecules, [0.5, -1.5])

        result = molecule_sum(fact, representation, TimeGrid(1.0 / 64, 0.25, 16))

        assert result["p_sum"] == pytest.approx(2.0)
        assert result["all_verified"]
        assert result["molecules"] == 2
        assert math.isfinite(result["ratio"]) and result["ratio"] > 0

    def test_reconstruction_error_against_target(self, fine_laplacian):
        molecule = generate_molecule(fine_laplacian, Ball((32,), 1.0 / 16), 1.0, 1, 1.0, seed=1)
        representation = molecular_representation([molecule], [2.0], target=molecule.sample * 2.0)

        assert representation.reconstruction_error() == pytest.approx(0.0, abs=1e-14)
