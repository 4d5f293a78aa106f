"""JSON/CSV codecs and report files."""
from .codecs import (
    coefficient_field_from_dict,
    coefficient_field_to_dict,
    decode_complex,
    encode_complex,
    grid_function_from_dict,
    grid_function_to_dict,
    load_coefficient_field,
    molecule_from_archive,
    molecule_to_archive,
    save_coefficient_field,
    tent_field_from_dict,
    tent_field_to_dict,
)
from .report_writer import (
    SUPPORTED_FORMATS,
    TIMESTAMP_FIELD,
    ReportWriter,
    comparable_payload,
    dumps_report,
    load_report,
    report_payload,
    to_jsonable,
)

__all__ = [
    'coefficient_field_from_dict',
    'coefficient_field_to_dict',
    'decode_complex',
    'encode_complex',
    'grid_function_from_dict',
    'grid_function_to_dict',
    'load_coefficient_field',
    'molecule_from_archive',
    'molecule_to_archive',
    'save_coefficient_field',
    'tent_field_from_dict',
    'tent_field_to_dict',
    'SUPPORTED_FORMATS',
    'TIMESTAMP_FIELD',
    'ReportWriter',
    'comparable_payload',
    'dumps_report',
    'load_report',
    'report_payload',
    'to_jsonable',
]
