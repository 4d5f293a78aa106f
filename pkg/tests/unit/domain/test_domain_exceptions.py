"""Unit tests for domain exceptions.

Tests the exception hierarchy to ensure proper attributes and messages
across the domain layer.
"""
import pytest

from src.domain.exceptions import (
    ConfigurationError,
    DomainException,
    EllipticityError,
    FactorizationError,
    KernelObstructionError,
    MoleculeConstructionError,
    SectorMismatchError,
    StudyPreconditionError,
)


@pytest.mark.unit
class TestDomainException:
    """Tests for base DomainException class."""

    def test_domain_exception_is_base_exception(self):
        """DomainException should inherit from Exception."""
        # Arrange & Act
        exc = DomainException("test message")

        # Assert
        assert isinstance(exc, Exception)
        assert str(exc) == "test message"


@pytest.mark.unit
class TestConfigurationError:
    """Tests for ConfigurationError."""

    def test_stores_field_path_and_message(self):
        # Act
        exc = ConfigurationError("time_grid.levels", "must be >= 8")

        # Assert
        assert exc.field_path == "time_grid.levels"
        assert exc.message == "must be >= 8"
        assert "time_grid.levels" in str(exc)

    def test_inherits_from_domain_exception(self):
        assert isinstance(ConfigurationError("a", "b"), DomainException)


@pytest.mark.unit
class TestNumericalErrors:
    """Tests for errors raised by the numerical core."""

    def test_factorization_error_reports_residual(self):
        exc = FactorizationError(3.2e-8, 1e-10)

        assert exc.residual == 3.2e-8
        assert "3.200e-08" in str(exc)

    def test_kernel_obstruction_names_operation(self):
        exc = KernelObstructionError("invsqrt_apply", 0.5 + 0j)

        assert exc.operation == "invsqrt_apply"
        assert "mean-zero" in str(exc)

    def test_sector_mismatch_keeps_angles(self):
        exc = SectorMismatchError(0.3, 0.5)

        assert (exc.mu, exc.omega) == (0.3, 0.5)

    def test_ellipticity_error_mentions_site(self):
        exc = EllipticityError("lambda_1 > 0", -0.1, site=(3,))

        assert "(3,)" in str(exc)
        assert exc.site == (3,)

    def test_molecule_construction_error(self):
        exc = MoleculeConstructionError(1, 2)

        assert exc.max_usable_ring == 1
        assert exc.required == 2

    def test_study_precondition_prefixes_study(self):
        exc = StudyPreconditionError("pq-probe", "need 50 probes")

        assert str(exc) == "pq-probe: need 50 probes"
        assert isinstance(exc, DomainException)
