"""Unit tests for TorusGrid and TimeGrid value objects."""
import math

import numpy as np
import pytest

from src.domain.exceptions import InvalidGridError, InvalidTimeGridError
from src.domain.value_objects import TimeGrid, TorusGrid


@pytest.mark.unit
class TestTorusGrid:
    """Tests for the periodic lattice."""

    def test_spacing_is_exact_inverse(self):
        """h = 1/N exactly, without accumulated rounding."""
        grid = TorusGrid(1, 8)

        assert grid.spacing == 0.125
        assert grid.cell_volume == 0.125

    def test_two_dimensional_shape_and_count(self):
        grid = TorusGrid(2, 16)

        assert grid.shape == (16, 16)
        assert grid.total_points == 256
        assert grid.cell_volume == pytest.approx(1.0 / 256)

    @pytest.mark.parametrize("n", [0, 3, 4])
    def test_rejects_unsupported_dimension(self, n):
        with pytest.raises(InvalidGridError) as exc_info:
            TorusGrid(n, 8)

        assert "dimension" in str(exc_info.value)

    @pytest.mark.parametrize("N", [2, 7, 9, 15])
    def test_rejects_small_or_odd_points(self, N):
        with pytest.raises(InvalidGridError):
            TorusGrid(1, N)

    def test_rejects_non_integer_points(self):
        with pytest.raises(InvalidGridError):
            TorusGrid(1, 8.0)

    def test_refined_doubles_points(self):
        assert TorusGrid(2, 8).refined() == TorusGrid(2, 16)

    def test_normalize_site_wraps_around(self):
        grid = TorusGrid(2, 8)

        assert grid.normalize_site((9, -1)) == (1, 7)
        assert TorusGrid(1, 8).normalize_site(10) == (2,)

    def test_normalize_site_wrong_arity(self):
        with pytest.raises(InvalidGridError):
            TorusGrid(2, 8).normalize_site((1,))

    def test_site_from_index_is_row_major(self):
        grid = TorusGrid(2, 8)

        assert grid.site_from_index(0) == (0, 0)
        assert grid.site_from_index(9) == (1, 1)
        assert grid.site_from_index(63) == (7, 7)

    def test_equal_grids_hash_equal(self):
        assert hash(TorusGrid(1, 16)) == hash(TorusGrid(1, 16))
        assert TorusGrid(1, 16) != TorusGrid(2, 16)


@pytest.mark.unit
class TestTimeGrid:
    """Tests for geometric time samples."""

    def test_endpoints_are_exact(self):
        tg = TimeGrid(0.01, 1.0, 9)

        samples = tg.samples
        assert samples[0] == 0.01
        assert samples[-1] == 1.0
        assert len(samples) == 9

    def test_ratio_and_log_weight(self):
        tg = TimeGrid(0.01, 1.0, 9)

        assert tg.ratio ** 8 == pytest.approx(100.0)
        assert tg.log_weight == pytest.approx(math.log(100.0) / 8)

    def test_samples_are_geometric(self):
        samples = TimeGrid(1e-3, 1.0, 16).samples

        ratios = samples[1:] / samples[:-1]
        assert np.allclose(ratios, ratios[0])

    def test_minimum_levels_enforced(self):
        """levels = 3 is below the minimum of 8."""
        with pytest.raises(InvalidTimeGridError) as exc_info:
            TimeGrid(0.01, 1.0, 3)

        assert "levels" in str(exc_info.value)

    @pytest.mark.parametrize("t_min, t_max", [(0.0, 1.0), (-1.0, 1.0), (1.0, 1.0), (2.0, 1.0)])
    def test_bounds_rejected(self, t_min, t_max):
        with pytest.raises(InvalidTimeGridError):
            TimeGrid(t_min, t_max, 8)

    def test_infinite_bounds_rejected(self):
        with pytest.raises(InvalidTimeGridError):
            TimeGrid(0.1, math.inf, 8)

    def test_refined_keeps_window(self):
        tg = TimeGrid(0.01, 1.0, 8).refined()

        assert (tg.t_min, tg.t_max, tg.levels) == (0.01, 1.0, 16)
