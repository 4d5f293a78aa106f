"""Unit tests for study result entities."""
import math

import pytest

from src.domain.entities import (
    ConstantBound,
    DecayFit,
    EquivalenceReport,
    StudyReport,
    spread_of,
)


def _report(ratios, drift=None):
    return EquivalenceReport(
        functional_a="S_L",
        functional_b="N_hL",
        p=1.0,
        ratios=tuple(ratios),
        member_labels=tuple(f"m{i}" for i in range(len(ratios))),
        refinement_drift=drift,
    )


@pytest.mark.unit
class TestSpread:

    def test_spread_is_max_over_min(self):
        assert spread_of([1.0, 2.0, 4.0]) == 4.0

    def test_spread_of_constant_band_is_one(self):
        assert spread_of([3.0] * 5) == 1.0

    @pytest.mark.parametrize("values", [[], [1.0, 0.0], [1.0, math.inf], [1.0, -2.0]])
    def test_degenerate_bands_are_infinite(self, values):
        assert spread_of(values) == math.inf


@pytest.mark.unit
class TestEquivalenceReport:

    def test_band_and_pass(self):
        report = _report([0.5, 1.0, 2.0])

        assert report.band == (0.5, 2.0)
        assert report.spread == 4.0
        assert report.passed

    def test_spread_over_threshold_fails(self):
        assert not _report([0.1, 2.0]).passed

    def test_drift_over_threshold_fails(self):
        assert _report([1.0, 2.0], drift=1.5).passed
        assert not _report([1.0, 2.0], drift=2.5).passed

    def test_nan_drift_fails(self):
        assert not _report([1.0, 2.0], drift=math.nan).passed

    def test_to_dict_carries_members(self):
        payload = _report([1.0, 2.0]).to_dict()

        assert payload["members"] == ["m0", "m1"]
        assert payload["band"] == [1.0, 2.0]
        assert payload["passed"] is True


@pytest.mark.unit
class TestDecayFit:

    def _fit(self, q_hat, monotone=True, degenerate=False):
        return DecayFit(
            distances=(0.1, 0.2),
            times=(1e-3,),
            log_norms=((-1.0, -3.0),),
            q_hat=q_hat,
            q_target=2.0,
            residual=0.01,
            monotone=monotone,
            degenerate=degenerate,
        )

    def test_relative_error(self):
        assert self._fit(2.4).relative_error == pytest.approx(0.2)

    def test_passes_within_tolerance(self):
        assert self._fit(1.7).passed
        assert not self._fit(2.7).passed

    def test_non_monotone_or_degenerate_fails(self):
        assert not self._fit(2.0, monotone=False).passed
        assert not self._fit(2.0, degenerate=True).passed

    def test_exponent_must_exceed_one(self):
        fit = DecayFit((0.1,), (1.0,), ((0.0,),), 1.0, 1.2, 0.0, True, relative_tolerance=0.5)

        assert not fit.passed

    def test_nan_exponent(self):
        assert self._fit(math.nan).relative_error == math.inf


@pytest.mark.unit
class TestConstantBound:

    def test_skipped_members_ignored(self):
        bound = ConstantBound("S<=C*N", "statement", (1.0, None, 3.0), ("a", "b", "c"))

        assert bound.measured == [1.0, 3.0]
        assert bound.family_max == 3.0
        assert bound.finite
        assert bound.passed

    def test_infinite_constant_fails(self):
        bound = ConstantBound("x", "s", (1.0, math.inf), ("a", "b"))

        assert not bound.finite
        assert not bound.passed

    def test_threshold(self):
        bound = ConstantBound("x", "s", (1.0, 1.5), ("a", "b"), threshold=1.2)

        assert not bound.passed

    def test_all_skipped_is_not_finite(self):
        bound = ConstantBound("x", "s", (None,), ("a",))

        assert math.isnan(bound.family_max)
        assert not bound.finite


@pytest.mark.unit
class TestStudyReport:

    def test_require_records_failures(self):
        report = StudyReport("gaffney")

        report.require(True, "decay_monotone")
        report.require(False, "decay_exponent")

        assert report.failures == ["decay_exponent"]
        assert not report.passed

    def test_tables_are_copied(self):
        report = StudyReport("equivalence")
        rows = [[1, 2]]

        report.add_table("band", ["a", "b"], rows)
        rows[0][0] = 99

        assert report.tables["band"] == (["a", "b"], [[1, 2]])

    def test_to_dict(self):
        report = StudyReport("riesz", parameters={"seed": 0})
        report.add_summary("riesz_max", 1.0)

        payload = report.to_dict()

        assert payload["study"] == "riesz"
        assert payload["passed"] is True
        assert payload["summary"] == [["riesz_max", 1.0]]
