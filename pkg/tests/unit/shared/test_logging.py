"""Unit tests for the structured logging helpers."""
import numpy as np
import pytest
from structlog.testing import capture_logs

from src.domain.exceptions import ConfigurationError, InvalidExponentError
from src.shared.logging import LoggerFactory, log_error_message, log_operation


@pytest.mark.unit
class TestStructuredLogger:

    def test_numpy_fields_become_plain_values(self):
        logger = LoggerFactory.get_numerics_logger("decay")

        with capture_logs() as logs:
            logger.info("decay_fitted", q_hat=np.float64(1.5), rows=np.arange(3))

        assert logs[0]["q_hat"] == 1.5
        assert type(logs[0]["q_hat"]) is float
        assert logs[0]["rows"] == [0, 1, 2]
        assert logs[0]["component"] == "decay"

    def test_global_context_reaches_every_logger(self):
        LoggerFactory.set_global_context(study="gaffney", seed=7)
        logger = LoggerFactory.get_application_logger("controller")

        with capture_logs() as logs:
            logger.warning("clamped")

        assert logs[0]["seed"] == 7
        assert logs[0]["study"] == "gaffney"
        assert logs[0]["layer"] == "application"

    def test_bind_keeps_previous_context(self):
        logger = LoggerFactory.get_study_logger("riesz").bind(p=1.0)

        with capture_logs() as logs:
            logger.info("ratio")

        assert logs[0]["study"] == "riesz"
        assert logs[0]["p"] == 1.0


@pytest.mark.unit
class TestOperationLogger:

    def test_success_carries_metrics(self):
        logger = LoggerFactory.get_study_logger("gaffney")

        with capture_logs() as logs:
            with log_operation(logger, "gaffney_study", N=64) as op:
                op.add_metric("q_hat", 2.0)

        assert [e["event"] for e in logs] == ["operation_started", "operation_finished"]
        assert logs[1]["q_hat"] == 2.0
        assert logs[1]["N"] == 64
        assert logs[0]["operation_id"] == logs[1]["operation_id"]

    def test_domain_error_is_rejected_and_reraised(self):
        logger = LoggerFactory.get_study_logger("equivalence")

        with capture_logs() as logs:
            with pytest.raises(InvalidExponentError):
                with log_operation(logger, "equivalence_study"):
                    raise InvalidExponentError(-1.0)

        assert logs[-1]["event"] == "operation_rejected"
        assert logs[-1]["log_level"] == "warning"
        assert logs[-1]["error_type"] == "InvalidExponentError"

    def test_unexpected_error_is_failed(self):
        logger = LoggerFactory.get_study_logger("equivalence")

        with capture_logs() as logs:
            with pytest.raises(RuntimeError):
                with log_operation(logger, "equivalence_study"):
                    raise RuntimeError("boom")

        assert logs[-1]["event"] == "operation_failed"
        assert logs[-1]["log_level"] == "error"


@pytest.mark.unit
class TestLogErrorMessage:

    def test_field_path_is_recorded(self):
        logger = LoggerFactory.get_application_logger("lab_controller")
        error = ConfigurationError("time_grid.levels", "must be >= 8")

        with capture_logs() as logs:
            log_error_message(logger, "study_aborted", error=error, study="gaffney")

        assert logs[0]["field_path"] == "time_grid.levels"
        assert logs[0]["error_type"] == "ConfigurationError"
        assert logs[0]["study"] == "gaffney"
