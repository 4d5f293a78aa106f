"""Application controllers."""
from .lab_controller import LabController, build_parser, format_summary, main, overrides_from_args

__all__ = ["LabController", "build_parser", "format_summary", "main", "overrides_from_args"]
