"""Bound reports, campaign aggregation and report files."""
from .models import BoundStatus, BoundReport, GraphRecord, CampaignSummary, graph_digest
from .aggregator import ReportAggregator
from .writer import ReportWriter, CSV_COLUMNS, round_significant

__all__ = [
    "BoundStatus",
    "BoundReport",
    "GraphRecord",
    "CampaignSummary",
    "graph_digest",
    "ReportAggregator",
    "ReportWriter",
    "CSV_COLUMNS",
    "round_significant"
]
