"""Unit tests for report files and lattice codecs."""
import json
import math

import numpy as np
import pandas as pd
import pytest

from src.domain.entities import StudyReport
from src.domain.exceptions import ShapeMismatchError
from src.domain.value_objects import Ball, GridFunction, TorusGrid
from src.infrastructure.conegeo import TentGenerator, build_tent_field
from src.infrastructure.elliptic import assemble, polyharmonic_coefficients, random_elliptic_coefficients
from src.infrastructure.hardy import generate_molecule
from src.infrastructure.serialization import (
    TIMESTAMP_FIELD,
    ReportWriter,
    coefficient_field_from_dict,
    coefficient_field_to_dict,
    comparable_payload,
    decode_complex,
    dumps_report,
    grid_function_from_dict,
    grid_function_to_dict,
    load_coefficient_field,
    load_report,
    molecule_from_archive,
    molecule_to_archive,
    report_payload,
    save_coefficient_field,
    tent_field_from_dict,
    tent_field_to_dict,
    to_jsonable,
)


@pytest.fixture
def report():
    report = StudyReport(study="pq-probe", parameters={"p": 1.0, "grid": (1, 16)})
    report.add_table("endpoints", ["p", "ratio", "bounded"], [[1.0, np.float64(0.5), True], [2.0, math.inf, False]])
    report.add_summary("probes", 50)
    report.require(False, "p_minus_below_p_plus")
    return report


@pytest.mark.unit
class TestToJsonable:

    def test_non_finite_floats_become_strings(self):
        assert to_jsonable([math.inf, -math.inf, math.nan]) == ["inf", "-inf", "nan"]

    def test_numpy_and_complex_values(self):
        converted = to_jsonable({"a": np.arange(3), "z": 1 + 2j, "flag": np.bool_(True), 3: np.float32(0.5)})

        assert converted == {"a": [0, 1, 2], "z": {"re": 1.0, "im": 2.0}, "flag": True, "3": 0.5}
        json.dumps(converted, allow_nan=False)


@pytest.mark.unit
class TestReportPayload:

    def test_payload_is_strict_json(self, report):
        payload = report_payload(report, config={"grid": {"N": 16}})

        text = dumps_report(payload)

        assert json.loads(text)["passed"] is False
        assert payload["failures"] == ["p_minus_below_p_plus"]
        assert payload["tables"] == ["endpoints"]
        assert "Infinity" not in text

    def test_comparable_payload_drops_timestamp(self, report):
        first = report_payload(report)
        second = dict(first, **{TIMESTAMP_FIELD: "1970-01-01T00:00:00+00:00"})

        assert TIMESTAMP_FIELD in first
        assert comparable_payload(first) == comparable_payload(second)


@pytest.mark.unit
class TestReportWriter:

    def test_writes_json_csv_and_plot_manifest(self, report, tmp_path):
        written = ReportWriter(str(tmp_path)).write(report)

        names = sorted(p.name for p in written)
        assert names == ["pq_probe.json", "pq_probe__endpoints.csv", "pq_probe__plots.json"]

        frame = pd.read_csv(tmp_path / "pq_probe__endpoints.csv")
        assert list(frame.columns) == ["p", "ratio", "bounded"]
        assert frame["ratio"].tolist() == [0.5, math.inf]

        manifest = load_report(tmp_path / "pq_probe__plots.json")
        assert manifest["series"] == [
            {"table": "endpoints", "csv": "pq_probe__endpoints.csv", "x": "p", "y": ["ratio", "bounded"]}
        ]

    def test_json_only(self, report, tmp_path):
        written = ReportWriter(str(tmp_path / "nested"), formats=["json"]).write(report)

        assert [p.name for p in written] == ["pq_probe.json"]
        assert load_report(written[0])["study"] == "pq-probe"

    def test_unknown_format(self, tmp_path):
        with pytest.raises(ValueError):
            ReportWriter(str(tmp_path), formats=["xlsx"])


@pytest.mark.unit
class TestReportArtifacts:

    def test_requested_artifact_is_written_beside_report(self, report, tmp_path):
        report.add_artifact("tent_field", {"values": [[1.0, -0.5]]}, fmt="tent")

        written = ReportWriter(str(tmp_path), formats=["json", "tent"]).write(report)

        assert sorted(p.name for p in written) == ["pq_probe.json", "pq_probe__tent_field.json"]
        assert load_report(tmp_path / "pq_probe__tent_field.json") == {"values": [[1.0, -0.5]]}

    def test_artifact_skipped_when_format_not_requested(self, report, tmp_path):
        report.add_artifact("tent_field", {"values": []}, fmt="tent")

        written = ReportWriter(str(tmp_path), formats=["json"]).write(report)

        assert [p.name for p in written] == ["pq_probe.json"]
        assert "artifacts" not in load_report(written[0])

    def test_non_finite_artifact_values_stay_strict_json(self, report, tmp_path):
        report.add_artifact("molecules", {"bounds": [math.inf, 0.5]})

        ReportWriter(str(tmp_path), formats=["json"]).write(report)

        text = (tmp_path / "pq_probe__molecules.json").read_text(encoding="utf-8")
        assert json.loads(text) == {"bounds": ["inf", 0.5]}


def _through_json(payload):
    return json.loads(json.dumps(to_jsonable(payload)))


@pytest.mark.unit
class TestGridFunctionCodec:

    def test_payload_layout_is_row_major_pairs(self):
        f = GridFunction(TorusGrid(2, 4), (np.arange(16) + 0.5j).reshape(4, 4))

        payload = grid_function_to_dict(f)

        assert set(payload) == {"n", "N", "values"}
        assert (payload["n"], payload["N"]) == (2, 4)
        assert payload["values"][:2] == [[0.0, 0.5], [1.0, 0.5]]
        assert payload["values"][5] == [5.0, 0.5]
        assert len(payload["values"]) == 16

    def test_round_trip_is_bit_exact(self, smooth_mean_zero):
        restored = grid_function_from_dict(_through_json(grid_function_to_dict(smooth_mean_zero)))

        assert restored.grid == smooth_mean_zero.grid
        assert np.array_equal(restored.values, smooth_mean_zero.values)

    def test_decode_rejects_inconsistent_shape(self):
        with pytest.raises(ShapeMismatchError):
            decode_complex([[0.0, 0.0]] * 3, (4,))

    def test_decode_rejects_non_pairs(self):
        with pytest.raises(ShapeMismatchError):
            decode_complex([[0.0, 0.0, 0.0]] * 4, (4,))


@pytest.mark.unit
class TestCoefficientFieldCodec:

    def test_entries_layout(self, grid_2d):
        coeffs = random_elliptic_coefficients(1, grid_2d, 0.3, seed=7)

        payload = coefficient_field_to_dict(coeffs)

        assert (payload["m"], payload["n"], payload["N"]) == (1, 2, 8)
        assert len(payload["entries"]) == 4
        first = payload["entries"][0]
        assert set(first) == {"alpha", "beta", "values"}
        assert first["alpha"] == [0, 1] and first["beta"] == [0, 1]
        assert len(first["values"]) == 64

    def test_saved_field_reassembles_identical_matrix(self, grid_1d, tmp_path):
        original = random_elliptic_coefficients(2, grid_1d, 0.3, seed=7)

        path = save_coefficient_field(original, tmp_path / "fields" / "a.json")
        loaded = load_coefficient_field(path)

        assert np.array_equal(loaded.tensor, original.tensor)
        assert np.array_equal(
            assemble(loaded, trials=10, seed=0).matrix,
            assemble(original, trials=10, seed=0).matrix,
        )

    def test_entries_in_any_order(self, grid_2d):
        original = random_elliptic_coefficients(1, grid_2d, 0.2, seed=3)
        payload = coefficient_field_to_dict(original)
        payload["entries"].reverse()

        assert np.array_equal(coefficient_field_from_dict(payload).tensor, original.tensor)

    def test_missing_entry_is_rejected(self, grid_2d):
        payload = coefficient_field_to_dict(polyharmonic_coefficients(1, grid_2d))
        payload["entries"].pop()

        with pytest.raises(ShapeMismatchError):
            coefficient_field_from_dict(payload)

    def test_duplicate_entry_is_rejected(self, grid_2d):
        payload = coefficient_field_to_dict(polyharmonic_coefficients(1, grid_2d))
        payload["entries"][1] = payload["entries"][0]

        with pytest.raises(ShapeMismatchError):
            coefficient_field_from_dict(payload)

    def test_unknown_multi_index_is_rejected(self, grid_2d):
        payload = coefficient_field_to_dict(polyharmonic_coefficients(1, grid_2d))
        payload["entries"][0]["alpha"] = [2, 0]

        with pytest.raises(ShapeMismatchError):
            coefficient_field_from_dict(payload)


@pytest.mark.unit
class TestTentFieldCodec:

    def test_round_trip_is_bit_exact(self, laplacian_fact, smooth_mean_zero, time_grid):
        F = build_tent_field(laplacian_fact, smooth_mean_zero, TentGenerator.qk(1), time_grid)

        payload = tent_field_to_dict(F)
        restored = tent_field_from_dict(_through_json(payload))

        assert payload["values"][0] == [float(F.values[0, 0].real), float(F.values[0, 0].imag)]
        assert len(payload["values"]) == time_grid.levels * 16
        assert payload["t_samples"] == time_grid.samples.tolist()
        assert np.array_equal(restored.values, F.values)
        assert np.array_equal(restored.time_grid.samples, F.time_grid.samples)

    def test_level_count_must_match(self, laplacian_fact, smooth_mean_zero, time_grid):
        payload = tent_field_to_dict(build_tent_field(laplacian_fact, smooth_mean_zero, TentGenerator.qk(1), time_grid))
        payload["values"] = payload["values"][:-16]

        with pytest.raises(ShapeMismatchError):
            tent_field_from_dict(payload)


@pytest.mark.unit
class TestMoleculeArchive:

    def test_round_trip(self):
        op = assemble(polyharmonic_coefficients(1, TorusGrid(1, 64)), trials=10)
        molecule = generate_molecule(op, Ball((32,), 1.0 / 16), p=1.0, M=1, epsilon=1.0, seed=5)

        restored = molecule_from_archive(_through_json(molecule_to_archive(molecule)))

        assert np.array_equal(restored.sample.values, molecule.sample.values)
        assert np.array_equal(restored.witness.values, molecule.witness.values)
        assert np.array_equal(restored.achieved_bounds, molecule.achieved_bounds)
        assert restored.ball == molecule.ball
        assert (restored.p, restored.M, restored.epsilon, restored.seed) == (1.0, 1, 1.0, 5)
        assert restored.is_verified == molecule.is_verified
