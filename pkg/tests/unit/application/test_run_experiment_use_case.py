"""Unit tests for the experiment runner."""
import pytest

from src.application.use_cases import STUDY_USE_CASES, RunExperimentUseCase
from src.domain.entities import StudyReport
from src.domain.exceptions import ConfigurationError
from src.infrastructure.config import STUDY_NAMES, LabSettings


@pytest.fixture
def settings(tmp_path):
    return LabSettings(_env_file=None, REPORT_DIR=str(tmp_path / "reports"), DEFAULT_SEED=7)


@pytest.mark.unit
class TestRunExperimentUseCase:

    def test_every_study_has_a_use_case(self):
        assert set(STUDY_USE_CASES) == set(STUDY_NAMES)

    def test_load_config_layers(self, settings, tmp_path):
        path = tmp_path / "experiment.yaml"
        path.write_text("grid:\n  N: 32\nstudy:\n  name: gaffney\n", encoding="utf-8")

        config = RunExperimentUseCase(settings).load_config(str(path), ["grid.N=16"], study="riesz")

        assert config.grid.N == 16
        assert config.study.name == "riesz"
        assert config.study.seed == 7

    def test_invalid_override_is_reported_by_path(self, settings):
        with pytest.raises(ConfigurationError) as exc_info:
            RunExperimentUseCase(settings).load_config(overrides=["time_grid.levels=3"])

        assert exc_info.value.field_path == "time_grid.levels"

    def test_writes_reports_to_settings_directory(self, settings, tmp_path, mocker):
        stub = StudyReport("validate-operator")
        stub.add_summary("lambda1", 1.0)
        execute = mocker.patch(
            "src.application.use_cases.operator_use_cases.ValidateOperatorUseCase.execute",
            return_value=stub,
        )

        result = RunExperimentUseCase(settings).execute(overrides=["grid.N=16"], study="validate-operator")

        execute.assert_called_once()
        context = execute.call_args.args[0]
        assert context.grid.points_per_axis == 16
        assert result.passed
        assert result.output_dir == tmp_path / "reports"
        assert sorted(p.name for p in result.written) == [
            "validate_operator.json",
            "validate_operator__plots.json",
        ]

    def test_context_free_study_receives_config(self, settings, tmp_path, mocker):
        merge = mocker.patch(
            "src.application.use_cases.report_merge_use_case.merge_reports",
            return_value=StudyReport("report-merge"),
        )

        result = RunExperimentUseCase(settings).execute(
            overrides=["study.inputs=[a.json]", f"output.directory={tmp_path / 'merged'}"],
            study="report-merge",
        )

        merge.assert_called_once_with(["a.json"])
        assert result.output_dir == tmp_path / "merged"
