"""Unit tests for GridFunction and MultiIndex."""
import numpy as np
import pytest

from src.domain.exceptions import NonFiniteValuesError, ShapeMismatchError
from src.domain.value_objects import GridFunction, MultiIndex, TorusGrid


@pytest.mark.unit
class TestGridFunction:
    """Tests for sampled complex functions."""

    def test_values_are_read_only(self, grid_1d):
        f = GridFunction.constant(grid_1d, 1.0)

        with pytest.raises(ValueError):
            f.values[0] = 2.0

    def test_constructor_copies_input(self, grid_1d):
        raw = np.ones(16)
        f = GridFunction(grid_1d, raw)

        raw[0] = 5.0

        assert f.values[0] == 1.0

    def test_flat_vector_is_reshaped(self, grid_2d):
        f = GridFunction(grid_2d, np.arange(64))

        assert f.values.shape == (8, 8)
        assert f.values[1, 0] == 8

    def test_shape_mismatch(self, grid_1d):
        with pytest.raises(ShapeMismatchError):
            GridFunction(grid_1d, np.ones(15))

    @pytest.mark.parametrize("bad", [np.nan, np.inf])
    def test_non_finite_rejected(self, grid_1d, bad):
        values = np.ones(16)
        values[3] = bad

        with pytest.raises(NonFiniteValuesError):
            GridFunction(grid_1d, values)

    def test_l2_norm_of_constant(self, grid_2d):
        """||c||_2 = |c| on the unit torus."""
        assert GridFunction.constant(grid_2d, 3.0).l2_norm() == pytest.approx(3.0)

    def test_inner_product_is_conjugate_linear_in_second(self, grid_1d):
        f = GridFunction.constant(grid_1d, 1.0)
        g = GridFunction.constant(grid_1d, 1j)

        assert f.inner(g) == pytest.approx(-1j)

    def test_mean_zero_projection(self, grid_1d):
        f = GridFunction.from_callable(grid_1d, lambda x: 2.0 + np.cos(2 * np.pi * x))

        assert not f.is_mean_zero()
        assert f.project_mean_zero().is_mean_zero()

    def test_point_mass(self, grid_2d):
        f = GridFunction.point_mass(grid_2d, (9, 2), 2.0)

        assert f.values[1, 2] == 2.0
        assert f.sup_norm() == 2.0
        assert np.count_nonzero(f.values) == 1

    def test_arithmetic_requires_same_grid(self, grid_1d):
        f = GridFunction.zeros(grid_1d)
        g = GridFunction.zeros(TorusGrid(1, 32))

        with pytest.raises(ShapeMismatchError):
            f + g

    def test_scalar_multiplication_both_sides(self, grid_1d):
        f = GridFunction.constant(grid_1d, 1.0)

        assert np.allclose((2 * f).values, (f * 2).values)
        assert np.allclose((-f).values, -1.0)


@pytest.mark.unit
class TestMultiIndex:
    """Tests for multi-indices."""

    def test_order_and_factorial(self):
        alpha = MultiIndex((2, 1))

        assert alpha.order == 3
        assert alpha.factorial == 2

    def test_of_order_is_lexicographic(self):
        indices = [a.components for a in MultiIndex.of_order(2, 2)]

        assert indices == [(0, 2), (1, 1), (2, 0)]

    def test_of_order_counts(self):
        """There are C(n+k-1, k) indices of order k in dimension n."""
        assert len(MultiIndex.of_order(2, 3)) == 4
        assert len(MultiIndex.of_order(1, 5)) == 1

    def test_negative_components_rejected(self):
        with pytest.raises(ValueError):
            MultiIndex((1, -1))

    def test_addition_needs_same_dimension(self):
        assert MultiIndex((1, 0)) + MultiIndex((0, 2)) == MultiIndex((1, 2))
        with pytest.raises(ValueError):
            MultiIndex((1,)) + MultiIndex((1, 0))
