"""JSON and CSV output for verification campaigns."""
import csv
import json
import math
from pathlib import Path
from typing import Iterable, List, Optional

from .models import CampaignSummary, GraphRecord
from config.settings import get_settings
from utils.exceptions import InputError
from utils.logger import get_logger

logger = get_logger()

CSV_COLUMNS = [
    "graph_index",
    "graph_name",
    "digest",
    "inequality",
    "status",
    "assertable",
    "lhs",
    "middle",
    "rhs",
    "slack",
]


def round_significant(value, digits: int):
    """Round floats to `digits` significant digits, recursing into containers."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, float):
        if not math.isfinite(value):
            return str(value)
        return float(f"{value:.{digits}g}")
    if isinstance(value, dict):
        return {k: round_significant(v, digits) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [round_significant(v, digits) for v in value]
    return value


class ReportWriter:
    """Writes campaign records and summaries to disk."""

    def __init__(self, significant_digits: Optional[int] = None):
        self.digits = significant_digits or get_settings().significant_digits

    def document(self, records: List[GraphRecord], summary: Optional[CampaignSummary] = None, meta: Optional[dict] = None) -> dict:
        payload = {"meta": meta or {}}
        if summary is not None:
            payload["summary"] = summary.to_dict()
        payload["graphs"] = [r.to_dict() for r in records]
        return round_significant(payload, self.digits)

    def dumps(self, payload: dict) -> str:
        return json.dumps(round_significant(payload, self.digits), indent=2, ensure_ascii=False)

    def write_json(
        self,
        path: Path,
        records: List[GraphRecord],
        summary: Optional[CampaignSummary] = None,
        meta: Optional[dict] = None
    ) -> None:
        document = self.document(records, summary, meta)
        self._write_text(path, json.dumps(document, indent=2, ensure_ascii=False) + "\n")
        logger.info(f"Wrote {len(records)} graph records to {path}")

    def csv_rows(self, records: Iterable[GraphRecord]) -> List[dict]:
        rows = []
        for record in records:
            for report in record.reports:
                row = {
                    "graph_index": record.index,
                    "graph_name": record.name,
                    "digest": record.digest,
                    "inequality": report.inequality,
                    "status": report.status.value,
                    "assertable": report.assertable,
                    "lhs": report.lhs,
                    "middle": report.middle,
                    "rhs": report.rhs,
                    "slack": report.slack,
                }
                rows.append(round_significant(row, self.digits))
        return rows

    def write_csv(self, path: Path, records: List[GraphRecord]) -> None:
        rows = self.csv_rows(records)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            with open(path, "w", newline="", encoding="utf-8") as f:
                writer = csv.DictWriter(f, fieldnames=CSV_COLUMNS)
                writer.writeheader()
                writer.writerows(rows)
        except OSError as e:
            raise InputError(f"Cannot write {path}: {e}")
        logger.info(f"Wrote {len(rows)} report rows to {path}")

    def write_table(self, path: Path, columns: List[str], rows: List[dict]) -> None:
        """Plain CSV table with rounded floats."""
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            with open(path, "w", newline="", encoding="utf-8") as f:
                writer = csv.DictWriter(f, fieldnames=columns)
                writer.writeheader()
                writer.writerows(round_significant(row, self.digits) for row in rows)
        except OSError as e:
            raise InputError(f"Cannot write {path}: {e}")
        logger.info(f"Wrote {len(rows)} rows to {path}")

    def _write_text(self, path: Path, text: str) -> None:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding="utf-8")
        except OSError as e:
            raise InputError(f"Cannot write {path}: {e}")
