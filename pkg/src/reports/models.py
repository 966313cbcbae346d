"""Data models for inequality verification."""
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Union

from graphs.models import DiscreteGraph, MetricGraph
from utils.digest import payload_digest


class BoundStatus(str, Enum):
    """Tristate outcome of an inequality check."""
    HOLDS = "holds"
    VIOLATED = "violated"
    NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class BoundReport:
    """Evaluation of lhs <= middle <= rhs; either side may be absent."""
    inequality: str
    middle: float
    lhs: Optional[float]
    rhs: Optional[float]
    lower_status: BoundStatus
    upper_status: BoundStatus
    status: BoundStatus
    slack: Optional[float]
    tolerance: float
    assertable: bool
    quantities: Dict[str, float] = field(default_factory=dict)
    digest: str = ""
    note: str = ""

    @classmethod
    def evaluate(
        cls,
        inequality: str,
        middle: float,
        lhs: Optional[float] = None,
        rhs: Optional[float] = None,
        tolerance: float = 1e-9,
        assertable: bool = True,
        lower_applicable: bool = True,
        upper_applicable: bool = True,
        quantities: Optional[Dict[str, float]] = None,
        digest: str = "",
        note: str = ""
    ) -> "BoundReport":
        """Compare both sides against middle with an absolute tolerance."""
        margins = []

        lower_status = BoundStatus.NOT_APPLICABLE
        if lhs is not None and lower_applicable:
            margin = middle - lhs
            margins.append(margin)
            lower_status = BoundStatus.HOLDS if margin >= -tolerance else BoundStatus.VIOLATED

        upper_status = BoundStatus.NOT_APPLICABLE
        if rhs is not None and upper_applicable:
            margin = rhs - middle
            margins.append(margin)
            upper_status = BoundStatus.HOLDS if margin >= -tolerance else BoundStatus.VIOLATED

        sides = (lower_status, upper_status)
        if BoundStatus.VIOLATED in sides:
            status = BoundStatus.VIOLATED
        elif BoundStatus.HOLDS in sides:
            status = BoundStatus.HOLDS
        else:
            status = BoundStatus.NOT_APPLICABLE

        return cls(
            inequality=inequality,
            middle=middle,
            lhs=lhs,
            rhs=rhs,
            lower_status=lower_status,
            upper_status=upper_status,
            status=status,
            slack=min(margins) if margins else None,
            tolerance=tolerance,
            assertable=assertable,
            quantities=dict(quantities or {}),
            digest=digest,
            note=note,
        )

    @property
    def holds(self) -> bool:
        return self.status == BoundStatus.HOLDS

    @property
    def is_assertable_violation(self) -> bool:
        return self.assertable and self.status == BoundStatus.VIOLATED

    def to_dict(self) -> dict:
        return {
            "inequality": self.inequality,
            "status": self.status.value,
            "assertable": self.assertable,
            "lhs": self.lhs,
            "middle": self.middle,
            "rhs": self.rhs,
            "lower_status": self.lower_status.value,
            "upper_status": self.upper_status.value,
            "slack": self.slack,
            "tolerance": self.tolerance,
            "quantities": dict(sorted(self.quantities.items())),
            "digest": self.digest,
            "note": self.note,
        }


def graph_digest(g: Union[DiscreteGraph, MetricGraph]) -> str:
    """Digest of the canonical graph encoding carried by every report."""
    return payload_digest(g.to_dict())


@dataclass
class GraphRecord:
    """Everything computed for one graph of a campaign."""
    index: int
    name: str
    kind: str
    digest: str
    graph: dict
    quantities: Dict[str, object] = field(default_factory=dict)
    reports: List[BoundReport] = field(default_factory=list)
    error: Optional[str] = None

    @property
    def failed(self) -> bool:
        return self.error is not None

    @property
    def assertable_violations(self) -> List[BoundReport]:
        return [r for r in self.reports if r.is_assertable_violation]

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "name": self.name,
            "kind": self.kind,
            "digest": self.digest,
            "graph": self.graph,
            "quantities": self.quantities,
            "reports": [r.to_dict() for r in self.reports],
            "error": self.error,
        }


@dataclass
class CampaignSummary:
    """Counts over a set of graph records."""
    graph_count: int
    failed_count: int
    status_counts: Dict[str, Dict[str, int]]
    worst_slack: Dict[str, Optional[float]]
    violations: List[dict]
    informational_violations: List[dict]

    @property
    def has_assertable_violation(self) -> bool:
        return bool(self.violations)

    def to_dict(self) -> dict:
        return {
            "graphs": self.graph_count,
            "failed": self.failed_count,
            "status_counts": self.status_counts,
            "worst_slack": self.worst_slack,
            "violations": self.violations,
            "informational_violations": self.informational_violations,
        }
