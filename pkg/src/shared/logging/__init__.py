from .structured_logger import StructuredLogger
from .operation_logger import OperationLogger, log_operation
from .logger_factory import LoggerFactory
from .log_helpers import (
    log_error_message,
    log_invariant_check,
    log_measured_constant,
    log_skipped_member,
    log_study_result,
)

__all__ = [
    # Core logger
    'StructuredLogger',

    # Operation loggers (context managers)
    'OperationLogger',
    'log_operation',

    # Factory
    'LoggerFactory',

    # Helpers
    'log_error_message',
    'log_invariant_check',
    'log_measured_constant',
    'log_skipped_member',
    'log_study_result',
]
