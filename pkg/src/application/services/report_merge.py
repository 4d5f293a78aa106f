"""Merge of previously written JSON reports into one summary report."""
from pathlib import Path
from typing import Sequence

import structlog

from ...domain.constants import REPORT_SCHEMA_VERSION
from ...domain.entities import StudyReport
from ...domain.exceptions import StudyPreconditionError
from ...infrastructure.serialization import load_report

logger = structlog.get_logger(__name__)

MERGE_HEADER = ["source", "study", "passed", "failures"]


def merge_reports(paths: Sequence[str]) -> StudyReport:
    """
    One row per input report, in the given order; the merge passes when
    every input passed.

    Raises:
        StudyPreconditionError: missing file, unreadable JSON or another schema
    """
    report = StudyReport("report-merge", parameters={"inputs": list(paths)})
    rows = []
    for raw in paths:
        path = Path(raw)
        if not path.exists():
            raise StudyPreconditionError("report-merge", f"input report not found: {path}")
        try:
            payload = load_report(path)
        except ValueError as e:
            raise StudyPreconditionError("report-merge", f"{path} is not valid JSON: {e}")
        if payload.get("schema") != REPORT_SCHEMA_VERSION:
            raise StudyPreconditionError(
                "report-merge", f"{path} has schema {payload.get('schema')}, expected {REPORT_SCHEMA_VERSION}"
            )
        study = payload.get("study", "?")
        passed = bool(payload.get("passed", False))
        failures = list(payload.get("failures", []))
        rows.append([str(path), study, passed, ";".join(failures)])
        report.sections[str(path)] = {
            "study": study,
            "passed": passed,
            "failures": failures,
            "summary": payload.get("summary", []),
        }
        report.require(passed, f"{study}:{path.name}")
    report.add_table("reports", MERGE_HEADER, rows)
    report.add_summary("reports", len(rows))
    report.add_summary("passed", sum(1 for r in rows if r[2]))
    logger.info("reports_merged", inputs=len(rows), failed=len(report.failures))
    return report
