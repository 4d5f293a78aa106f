"""Unit tests for the JSON artifacts studies leave beside their reports."""
import numpy as np
import pytest

from src.application.factories import create_context
from src.application.use_cases import MoleculeUseCase, ValidateOperatorUseCase
from src.infrastructure.config import validate_experiment
from src.infrastructure.serialization import (
    ReportWriter,
    coefficient_field_from_dict,
    load_report,
    molecule_from_archive,
    tent_field_from_dict,
)


@pytest.mark.unit
class TestOperatorArtifacts:

    def test_coefficients_are_archived(self, tmp_path):
        config = validate_experiment({"grid": {"N": 16}, "operator": {"kind": "random", "seed": 3, "form_trials": 10}})
        context = create_context(config)

        report = ValidateOperatorUseCase().execute(context)
        ReportWriter(str(tmp_path), formats=config.output.formats).write(report)

        restored = coefficient_field_from_dict(load_report(tmp_path / "validate_operator__coefficients.json"))
        assert np.array_equal(restored.tensor, context.operator.coefficients.tensor)

    def test_tent_field_only_with_tent_format(self, tmp_path):
        tree = {"grid": {"N": 16}, "time_grid": {"levels": 10}, "operator": {"form_trials": 10}}
        plain = ValidateOperatorUseCase().execute(create_context(validate_experiment(tree)))
        assert "tent_field" not in plain.artifacts

        config = validate_experiment(dict(tree, output={"formats": ["json", "csv", "tent"]}))
        context = create_context(config)
        report = ValidateOperatorUseCase().execute(context)
        written = ReportWriter(str(tmp_path), formats=config.output.formats).write(report)

        assert "validate_operator__tent_field.json" in [p.name for p in written]
        assert "validate_operator__tent_energy.csv" in [p.name for p in written]
        F = tent_field_from_dict(load_report(tmp_path / "validate_operator__tent_field.json"))
        assert F.values.shape == (10, 16)
        assert np.array_equal(F.time_grid.samples, context.time_grid.samples)
        assert report.sections["tent_field"]["generator"] == "Q_1"

    def test_oversized_tent_field_is_skipped(self, mocker):
        mocker.patch("src.application.use_cases.study_use_case.TENT_DUMP_MAX_VALUES", 10)
        config = validate_experiment(
            {"grid": {"N": 16}, "time_grid": {"levels": 10}, "operator": {"form_trials": 10}, "output": {"formats": ["tent"]}}
        )

        report = ValidateOperatorUseCase().execute(create_context(config))

        assert "tent_field" not in report.artifacts
        assert "skipped" in report.sections["tent_field"]


@pytest.mark.unit
class TestMoleculeArtifacts:

    def test_molecules_archive_round_trips(self, tmp_path):
        config = validate_experiment({
            "grid": {"N": 64},
            "time_grid": {"levels": 12},
            "operator": {"form_trials": 5},
            "study": {"name": "molecule", "p": [1.0], "M": 1, "molecule_count": 2, "seed": 4},
        })

        report = MoleculeUseCase().execute(create_context(config))
        written = ReportWriter(str(tmp_path), formats=["json"]).write(report)

        assert [p.name for p in written] == ["molecule.json", "molecule__molecules.json"]
        archive = load_report(tmp_path / "molecule__molecules.json")
        assert (archive["p"], archive["M"]) == (1.0, 1)
        molecules = [molecule_from_archive(entry) for entry in archive["molecules"]]
        assert [m.seed for m in molecules] == [4, 5]
        assert all(m.sample.grid.points_per_axis == 64 for m in molecules)
        assert [m.is_verified for m in molecules] == [entry["verified"] for entry in archive["molecules"]]
