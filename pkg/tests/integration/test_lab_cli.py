"""End-to-end runs of lab.py subcommands."""
import io
import json

import pytest

from src.application.controllers import LabController, build_parser, overrides_from_args
from src.domain.entities import StudyReport
from src.infrastructure.serialization import ReportWriter, comparable_payload, load_report

SMALL = ["--N", "16", "--set", "time_grid.levels=10"]


def _run(argv):
    stdout, stderr = io.StringIO(), io.StringIO()
    code = LabController(stdout=stdout, stderr=stderr).run(argv)
    return code, stdout.getvalue(), stderr.getvalue()


@pytest.mark.unit
class TestArgumentMapping:

    def test_convenience_flags_become_overrides(self):
        args = build_parser().parse_args(
            ["equivalence", "--seed", "3", "--p", "0.5", "1", "--a", "S_L", "--b", "N_hL", "--set", "grid.n=2"]
        )

        assert overrides_from_args(args) == [
            "study.seed=3",
            "study.p=[0.5, 1.0]",
            "study.a=S_L",
            "study.b=N_hL",
            "grid.n=2",
        ]

    def test_report_merge_inputs(self):
        args = build_parser().parse_args(["report-merge", "a.json", "b.json"])

        assert overrides_from_args(args) == ["study.inputs=['a.json', 'b.json']"]

    def test_unknown_study(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args(["integrate-everything"])


@pytest.mark.integration
class TestLabCli:

    def test_validate_operator_passes(self, tmp_path):
        code, out, _ = _run(["validate-operator", *SMALL, "--output", str(tmp_path)])

        assert code == 0
        assert "RESUMEN: validate-operator" in out
        assert "✓ PASSED" in out
        payload = load_report(tmp_path / "validate_operator.json")
        assert payload["passed"] is True
        assert (tmp_path / "validate_operator__checks.csv").exists()

    def test_invalid_config_exits_with_usage_code(self, tmp_path):
        code, out, err = _run(["validate-operator", "--set", "time_grid.levels=3", "--output", str(tmp_path)])

        assert code == 2
        assert "time_grid.levels" in err
        assert out == ""
        assert not (tmp_path / "validate_operator.json").exists()

    def test_missing_config_file(self, tmp_path):
        code, _, err = _run(["gaffney", "--config", str(tmp_path / "absent.yaml")])

        assert code == 2
        assert "not found" in err

    def test_config_file_and_overrides(self, tmp_path):
        config = tmp_path / "experiment.yaml"
        config.write_text("grid:\n  N: 16\ntime_grid:\n  levels: 10\noutput:\n  formats: [json]\n", encoding="utf-8")

        code, _, _ = _run(["validate-operator", "-c", str(config), "--output", str(tmp_path / "out")])

        assert code == 0
        assert sorted(p.name for p in (tmp_path / "out").iterdir()) == [
            "validate_operator.json",
            "validate_operator__coefficients.json",
        ]
        assert load_report(tmp_path / "out" / "validate_operator.json")["config"]["grid"]["N"] == 16

    def test_archived_coefficients_rebuild_the_operator(self, tmp_path):
        base = ["--set", "grid.N=16", "--set", "time_grid.levels=10", "--set", "output.formats=[json]"]
        _run(["validate-operator", "--set", "operator.kind=random", *base, "--output", str(tmp_path / "a")])
        archived = tmp_path / "a" / "validate_operator__coefficients.json"

        _run([
            "validate-operator", "--set", "operator.kind=file", "--set", f"operator.coefficients_file={archived}",
            *base, "--output", str(tmp_path / "b"),
        ])

        first = dict(load_report(tmp_path / "a" / "validate_operator.json")["summary"])
        second = dict(load_report(tmp_path / "b" / "validate_operator.json")["summary"])
        assert load_report(tmp_path / "b" / "validate_operator.json")["config"]["operator"]["kind"] == "file"
        assert second["lambda1"] == first["lambda1"]
        assert second["norm"] == first["norm"]

    @pytest.mark.slow
    def test_repeated_runs_are_identical(self, tmp_path):
        argv = ["semigroup-bench", *SMALL, "--seed", "5", "--set", "study.probes=4", "--output", str(tmp_path)]

        assert _run(argv)[0] == 0
        first = load_report(tmp_path / "semigroup_bench.json")
        assert _run(argv)[0] == 0
        second = load_report(tmp_path / "semigroup_bench.json")

        assert comparable_payload(first) == comparable_payload(second)

    def test_merge_of_failed_report_exits_with_failure(self, tmp_path):
        failed = StudyReport("gaffney")
        failed.require(False, "decay_exponent")
        path = ReportWriter(str(tmp_path / "inputs"), formats=["json"]).write(failed)[0]

        code, out, _ = _run(["report-merge", str(path), "--output", str(tmp_path / "merged")])

        assert code == 1
        assert "✗ FAILED" in out
        merged = json.loads((tmp_path / "merged" / "report_merge.json").read_text(encoding="utf-8"))
        assert merged["failures"] == ["gaffney:gaffney.json"]

    def test_domain_error_exits_with_failure(self, tmp_path):
        code, out, err = _run(["report-merge", str(tmp_path / "absent.json"), "--output", str(tmp_path)])

        assert code == 1
        assert "report-merge failed" in err
        assert out == ""
