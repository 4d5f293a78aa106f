"""Unit tests for operator validation, the semigroup bench and invariant helpers."""
import math

import numpy as np
import pytest

from src.application.services import (
    flag_check,
    map_members,
    safe_ratio,
    semigroup_bench,
    upper_check,
    validate_operator,
)

TIMES = [1e-4, 1e-3, 1e-2, 1e-1]


@pytest.mark.unit
class TestCheckHelpers:

    def test_upper_check(self):
        assert upper_check("x", 0.5, 1.0).passed
        assert not upper_check("x", 1.5, 1.0).passed
        assert not upper_check("x", math.nan, 1.0).passed

    def test_flag_check_has_no_tolerance(self):
        check = flag_check("kernel", True, 1.0)

        assert check.tolerance is None
        assert check.row() == ["kernel", 1.0, None, True, ""]

    @pytest.mark.parametrize(
        "numerator, denominator, expected",
        [(2.0, 4.0, 0.5), (1.0, 0.0, math.inf), (0.0, 0.0, None), (0.0, 3.0, 0.0)],
    )
    def test_safe_ratio(self, numerator, denominator, expected):
        assert safe_ratio(numerator, denominator) == expected

    def test_map_members_keeps_order_with_threads(self):
        items = list(range(10))

        assert map_members(lambda x: x * x, items, max_workers=4) == [x * x for x in items]
        assert map_members(lambda x: -x, items) == [-x for x in items]


@pytest.mark.unit
class TestValidateOperator:

    def test_laplacian_passes_every_check(self, laplacian, laplacian_fact):
        checks = validate_operator(laplacian, laplacian_fact)

        failed = [c.invariant for c in checks if not c.passed]
        assert failed == []
        assert {c.invariant for c in checks} >= {
            "strong_ellipticity",
            "accretivity_defect",
            "spectrum_in_sector",
            "kernel_is_constants",
        }

    def test_random_operator_is_accretive(self, random_operator, random_fact):
        checks = {c.invariant: c for c in validate_operator(random_operator, random_fact)}

        assert checks["form_ellipticity"].passed
        assert checks["accretivity_defect"].passed
        assert checks["kernel_is_constants"].passed


@pytest.mark.unit
class TestSemigroupBench:

    def test_laplacian_bench_with_closed_forms_and_oracle(self, laplacian_fact):
        checks = semigroup_bench(laplacian_fact, probes=5, times=TIMES, seed=3, oracle=True, polyharmonic=True)

        names = [c.invariant for c in checks]
        assert "polyharmonic_closed_form" in names
        assert "kato_identity" in names
        assert "expm_oracle_agreement" in names
        assert [c.invariant for c in checks if not c.passed] == []

    def test_bilaplacian_closed_forms(self, bilaplacian_fact):
        checks = {c.invariant: c for c in semigroup_bench(bilaplacian_fact, 4, TIMES, polyharmonic=True)}

        assert checks["polyharmonic_closed_form"].passed
        assert checks["kato_identity"].passed

    def test_kernel_handling_on_random_operator(self, random_fact):
        checks = {c.invariant: c for c in semigroup_bench(random_fact, 4, TIMES, seed=1)}

        assert "polyharmonic_closed_form" not in checks
        assert checks["semigroup_fixes_constants"].passed
        assert checks["invsqrt_rejects_constants"].passed
        assert checks["semigroup_contraction"].passed

    def test_bench_is_seeded(self, laplacian_fact):
        first = semigroup_bench(laplacian_fact, 3, TIMES, seed=11)
        second = semigroup_bench(laplacian_fact, 3, TIMES, seed=11)

        assert np.allclose([c.measured for c in first], [c.measured for c in second], equal_nan=True)
