"""Verification campaign orchestration."""
from .campaign import (
    CampaignOrchestrator,
    CampaignResult,
    discrete_reports,
    verify_discrete,
    verify_metric
)

__all__ = ["CampaignOrchestrator", "CampaignResult", "discrete_reports", "verify_discrete", "verify_metric"]
