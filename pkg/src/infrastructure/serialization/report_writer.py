"""Report files: JSON (full), CSV tables and a JSON plot manifest."""
import json
import math
from enum import Enum
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional

import numpy as np
import pandas as pd
import structlog

from ...domain.constants import REPORT_SCHEMA_VERSION
from ...domain.entities import StudyReport

logger = structlog.get_logger(__name__)

# Excluded from byte comparisons between runs.
TIMESTAMP_FIELD = "generated_at"

SUPPORTED_FORMATS = ("json", "csv", "plot", "tent")


def to_jsonable(value: Any) -> Any:
    """
    Recursively convert numpy scalars/arrays, complex numbers and tuples.

    Non-finite floats become the strings "inf", "-inf" and "nan" so the
    output stays strict JSON.
    """
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        number = float(value)
        if math.isnan(number):
            return "nan"
        if math.isinf(number):
            return "inf" if number > 0 else "-inf"
        return number
    if isinstance(value, (complex, np.complexfloating)):
        return {"re": to_jsonable(value.real), "im": to_jsonable(value.imag)}
    if hasattr(value, "to_dict"):
        return to_jsonable(value.to_dict())
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Path):
        return str(value)
    return value


def report_payload(report: StudyReport, config: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    payload = {
        "schema": REPORT_SCHEMA_VERSION,
        TIMESTAMP_FIELD: datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "config": config or {},
        **report.to_dict(),
        "tables": sorted(report.tables),
    }
    return to_jsonable(payload)


def dumps_report(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def comparable_payload(payload: Dict[str, Any]) -> Dict[str, Any]:
    """Payload without the timestamp, for determinism checks."""
    return {k: v for k, v in payload.items() if k != TIMESTAMP_FIELD}


def load_report(path: Path) -> Dict[str, Any]:
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


class ReportWriter:
    """
    Writes one study report into a directory.

    Files: <study>.json, <study>__<table>.csv per table,
    <study>__plots.json describing every CSV series and
    <study>__<artifact>.json for each artifact whose format was requested
    ("json" for molecule archives and coefficient fields, "tent" for tent
    field dumps).
    """

    def __init__(self, directory: str, formats: Iterable[str] = SUPPORTED_FORMATS):
        self.directory = Path(directory)
        self.formats = tuple(formats)
        unknown = [f for f in self.formats if f not in SUPPORTED_FORMATS]
        if unknown:
            raise ValueError(f"Unknown report formats {unknown}, expected a subset of {SUPPORTED_FORMATS}")

    def _csv_name(self, study: str, table: str) -> str:
        return f"{study}__{table}.csv"

    def write(self, report: StudyReport, config: Optional[Dict[str, Any]] = None) -> List[Path]:
        self.directory.mkdir(parents=True, exist_ok=True)
        study = report.study.replace("-", "_")
        written: List[Path] = []

        if "json" in self.formats:
            path = self.directory / f"{study}.json"
            path.write_text(dumps_report(report_payload(report, config)), encoding="utf-8")
            written.append(path)

        if "csv" in self.formats or "plot" in self.formats:
            for name in sorted(report.tables):
                header, rows = report.tables[name]
                frame = pd.DataFrame(to_jsonable(rows), columns=header)
                path = self.directory / self._csv_name(study, name)
                frame.to_csv(path, index=False, float_format="%.12g")
                written.append(path)

        if "plot" in self.formats:
            path = self.directory / f"{study}__plots.json"
            manifest = {
                "schema": REPORT_SCHEMA_VERSION,
                "study": report.study,
                "series": [
                    {
                        "table": name,
                        "csv": self._csv_name(study, name),
                        "x": report.tables[name][0][0],
                        "y": report.tables[name][0][1:],
                    }
                    for name in sorted(report.tables)
                    if report.tables[name][0]
                ],
            }
            path.write_text(dumps_report(manifest), encoding="utf-8")
            written.append(path)

        for name in sorted(report.artifacts):
            fmt, payload = report.artifacts[name]
            if fmt not in self.formats:
                continue
            path = self.directory / f"{study}__{name}.json"
            path.write_text(json.dumps(to_jsonable(payload), ensure_ascii=False) + "\n", encoding="utf-8")
            written.append(path)

        logger.info("report_written", study=report.study, files=[str(p) for p in written])
        return written
