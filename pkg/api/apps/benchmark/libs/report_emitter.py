import json
from typing import List

from api.apps.benchmark.models import BenchReport, BenchRow, ReportFormat
from api.includes import exceptions
from api.includes.file_utils import FileUtils

REPORT_COLUMNS: List[str] = list(BenchRow.__fields__)


def emit_report(report: BenchReport, format: ReportFormat = ReportFormat.CSV) -> str:
    records = [row.dict() for row in report.rows]
    if ReportFormat(format) == ReportFormat.JSON:
        return json.dumps({"rows": records}, indent=2)
    return FileUtils().write_csv_text(records, REPORT_COLUMNS)


def parse_report(text: str, format: ReportFormat = ReportFormat.CSV) -> BenchReport:
    """Reads an emitted report back

    Raises:
        DomainError: the text is not a report in the given format
    """
    try:
        if ReportFormat(format) == ReportFormat.JSON:
            records = json.loads(text)["rows"]
        else:
            records = FileUtils().read_csv_text(text)
            if records and list(records[0]) != REPORT_COLUMNS:
                raise ValueError(f"unexpected csv header {list(records[0])}")
        return BenchReport(rows=[BenchRow(**record) for record in records])
    except (ValueError, KeyError, TypeError) as e:
        raise exceptions.DomainError(f"unreadable {format} report: {e}")
