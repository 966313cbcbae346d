"""Campaign aggregation."""
from collections import Counter, defaultdict
from typing import Dict, List, Optional

from .models import BoundStatus, CampaignSummary, GraphRecord
from utils.exceptions import ValidationError
from utils.logger import get_logger

logger = get_logger()


class ReportAggregator:
    """Aggregates bound reports by inequality and status."""

    def aggregate(self, records: List[GraphRecord]) -> CampaignSummary:
        """
        Count outcomes over all records.

        Args:
            records: Graph records of one campaign

        Returns:
            CampaignSummary object
        """
        if not records:
            raise ValidationError("Cannot aggregate an empty campaign")

        counts: Dict[str, Counter] = defaultdict(Counter)
        worst: Dict[str, Optional[float]] = {}
        violations: List[dict] = []
        informational: List[dict] = []

        for record in records:
            for report in record.reports:
                counts[report.inequality][report.status.value] += 1
                if report.slack is not None:
                    current = worst.get(report.inequality)
                    worst[report.inequality] = report.slack if current is None else min(current, report.slack)
                else:
                    worst.setdefault(report.inequality, None)

                if report.status == BoundStatus.VIOLATED:
                    entry = {
                        "graph_index": record.index,
                        "graph_name": record.name,
                        "digest": record.digest,
                        "inequality": report.inequality,
                        "slack": report.slack,
                    }
                    (violations if report.assertable else informational).append(entry)

        failed = sum(1 for r in records if r.failed)
        logger.info(
            f"Aggregated {len(records)} graphs: {len(violations)} assertable violations, "
            f"{len(informational)} informational, {failed} failed"
        )

        return CampaignSummary(
            graph_count=len(records),
            failed_count=failed,
            status_counts={k: dict(sorted(v.items())) for k, v in sorted(counts.items())},
            worst_slack=dict(sorted(worst.items())),
            violations=violations,
            informational_violations=informational,
        )
