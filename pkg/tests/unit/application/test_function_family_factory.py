"""Unit tests for function families and the study context factory."""
import numpy as np
import pytest

from src.application.factories import (
    build_family,
    create_context,
    create_function_family,
    default_descriptors,
    fourier_mode,
    random_bandlimited,
    refined_config,
    smoothed_indicator,
)
from src.domain.entities import FamilyMemberDescriptor, FamilyMemberKind
from src.domain.exceptions import ConfigurationError, MoleculeConstructionError
from src.domain.value_objects import TorusGrid
from src.infrastructure.config import validate_experiment
from src.infrastructure.config.experiment import FamilySection
from src.infrastructure.elliptic import random_elliptic_coefficients
from src.infrastructure.serialization import save_coefficient_field


@pytest.mark.unit
class TestMemberGenerators:

    def test_fourier_mode_is_unimodular(self, grid_1d):
        mode = fourier_mode(grid_1d, 3)

        assert np.allclose(np.abs(mode.values), 1.0)
        assert mode.is_mean_zero()

    def test_bandlimited_member_is_grid_independent(self):
        coarse = random_bandlimited(TorusGrid(1, 32), 4, seed=6)
        fine = random_bandlimited(TorusGrid(1, 64), 4, seed=6)

        assert np.allclose(fine.values[::2], coarse.values, atol=1e-12)

    def test_indicator_is_between_zero_and_one(self, grid_1d):
        values = smoothed_indicator(grid_1d, 0.2).values.real

        assert values.min() >= 0.0 and values.max() <= 1.0


@pytest.mark.unit
class TestBuildFamily:

    def test_members_are_normalized_and_mean_zero(self, grid_1d):
        section = FamilySection(fourier_modes=[1, 2], gaussian_widths=[0.1], random_count=1, random_band=3, indicator_widths=[0.2])

        family = create_function_family(section, grid_1d)

        assert len(family) == 5
        for member in family.members:
            assert member.l2_norm() == pytest.approx(1.0)
            assert member.is_mean_zero()

    def test_unresolved_frequency_is_skipped(self, grid_1d):
        descriptors = [
            FamilyMemberDescriptor.of(FamilyMemberKind.FOURIER_MODE, k=1),
            FamilyMemberDescriptor.of(FamilyMemberKind.FOURIER_MODE, k=8),
        ]

        family = build_family(descriptors, grid_1d)

        assert len(family) == 1
        assert family.skipped == ["fourier_mode(k=8)"]

    def test_molecule_without_operator_is_skipped(self, grid_1d):
        family = build_family(
            [FamilyMemberDescriptor.of(FamilyMemberKind.MOLECULE, seed=0),
             FamilyMemberDescriptor.of(FamilyMemberKind.FOURIER_MODE, k=1)],
            grid_1d,
        )

        assert family.skipped == ["molecule(seed=0)"]

    def test_failed_molecule_construction_is_skipped(self, grid_1d, laplacian, mocker):
        mocker.patch(
            "src.application.factories.function_family_factory.generate_molecule",
            side_effect=MoleculeConstructionError(0, 2),
        )
        descriptors = default_descriptors(FamilySection(fourier_modes=[1], gaussian_widths=[], random_count=0, molecules=2))

        family = build_family(descriptors, grid_1d, laplacian)

        assert family.labels == ["fourier_mode(k=1)"]
        assert len(family.skipped) == 2

    def test_constant_member_is_skipped(self, grid_1d):
        descriptors = [
            FamilyMemberDescriptor.of(FamilyMemberKind.FOURIER_MODE, k=0),
            FamilyMemberDescriptor.of(FamilyMemberKind.FOURIER_MODE, k=2),
        ]

        family = build_family(descriptors, grid_1d)

        assert family.labels == ["fourier_mode(k=2)"]


@pytest.mark.unit
class TestStudyContext:

    def test_context_from_config(self):
        config = validate_experiment({"grid": {"N": 16}, "time_grid": {"levels": 10}})

        context = create_context(config)

        assert context.grid == TorusGrid(1, 16)
        assert context.time_grid.t_min == pytest.approx(1.0 / 16)
        assert context.time_grid.levels == 10
        assert context.fact is context.fact

    def test_refined_config_doubles_points_and_keeps_ratio(self):
        config = validate_experiment({"grid": {"N": 16}, "time_grid": {"levels": 10}})

        fine = refined_config(config)

        assert fine.grid.N == 32
        assert fine.time_grid.levels > config.time_grid.levels
        assert config.grid.N == 16

    def test_random_operator_context(self):
        config = validate_experiment({"grid": {"N": 16}, "operator": {"kind": "random", "delta": 0.2, "seed": 3}})

        context = create_context(config)

        assert context.operator.m == 1
        assert context.fact.kernel_dimension == 1


@pytest.mark.unit
class TestCoefficientFileOperator:

    @pytest.fixture
    def saved_field(self, tmp_path):
        coeffs = random_elliptic_coefficients(1, TorusGrid(1, 16), 0.3, seed=7)
        return str(save_coefficient_field(coeffs, tmp_path / "a.json"))

    def _config(self, path, N=16, m=1):
        return validate_experiment({
            "grid": {"N": N},
            "operator": {"kind": "file", "coefficients_file": path, "m": m, "form_trials": 10},
        })

    def test_same_grid_matches_generated_operator(self, saved_field):
        from_file = create_context(self._config(saved_field)).operator
        generated = create_context(validate_experiment({
            "grid": {"N": 16},
            "operator": {"kind": "random", "delta": 0.3, "seed": 7, "form_trials": 10},
        })).operator

        assert np.array_equal(from_file.matrix, generated.matrix)

    def test_finer_grid_is_interpolated(self, saved_field):
        context = create_context(self._config(saved_field, N=32))
        direct = random_elliptic_coefficients(1, TorusGrid(1, 32), 0.3, seed=7)

        assert context.grid == TorusGrid(1, 32)
        assert np.allclose(context.operator.coefficients.tensor, direct.tensor, atol=1e-12)

    def test_refined_context_reads_the_same_file(self, saved_field):
        context = create_context(self._config(saved_field))

        fine = context.refined()

        assert fine.grid.points_per_axis == 32
        assert fine.config.operator.coefficients_file == saved_field

    @pytest.mark.parametrize("N, m", [(24, 1), (16, 2)])
    def test_incompatible_file(self, saved_field, N, m):
        with pytest.raises(ConfigurationError) as exc_info:
            create_context(self._config(saved_field, N=N, m=m))

        assert exc_info.value.field_path == "operator.coefficients_file"

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigurationError) as exc_info:
            create_context(self._config(str(tmp_path / "none.json")))

        assert "cannot read" in exc_info.value.message
