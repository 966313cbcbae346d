"""Dumbbell scans: h stays at 2/L while lambda_1 grows like pi^2 m^2."""
import math
from dataclasses import dataclass
from typing import List, Sequence

from .families import FamilySpec, generate_family
from quantum.cheeger import metric_cheeger
from quantum.fem import lambda1_metric
from utils.exceptions import ValidationError
from utils.logger import get_logger, set_graph_context

logger = get_logger()

SCAN_COLUMNS = ["m", "handle", "h", "lambda1", "pi2_m2", "ratio"]


@dataclass(frozen=True)
class ScanRow:
    m: int
    handle: float
    h: float
    lambda1: float
    pi2_m2: float

    @property
    def ratio(self) -> float:
        return self.lambda1 / self.pi2_m2

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "handle": self.handle,
            "h": self.h,
            "lambda1": self.lambda1,
            "pi2_m2": self.pi2_m2,
            "ratio": self.ratio,
        }


def parse_range(text: str) -> List[int]:
    """'A..B' or a single integer."""
    try:
        if ".." in text:
            start, stop = (int(part) for part in text.split("..", 1))
        else:
            start = stop = int(text)
    except ValueError:
        raise ValidationError(f"Expected an integer range A..B, got '{text}'")
    if start < 1 or stop < start:
        raise ValidationError(f"Invalid petal range '{text}'")
    return list(range(start, stop + 1))


def parse_values(text: str) -> List[float]:
    """Comma separated positive floats."""
    try:
        values = [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise ValidationError(f"Expected comma separated numbers, got '{text}'")
    if not values or any(not v > 0 for v in values):
        raise ValidationError(f"Handle lengths must be positive, got '{text}'")
    return values


def scan_dumbbell(m_values: Sequence[int], length: float, handles: Sequence[float]) -> List[ScanRow]:
    """One row per (m, handle), ordered by handle then m."""
    rows = []
    for handle in handles:
        for m in m_values:
            spec = FamilySpec("dumbbell", m, length=length, handle=handle)
            g = generate_family(spec)
            set_graph_context(spec.label())
            h = metric_cheeger(g).value
            lam = lambda1_metric(g).extrapolated
            rows.append(ScanRow(m, handle, h, lam, math.pi ** 2 * m * m))
            logger.info(f"dumbbell m={m} handle={handle:g}: h = {h:.12g}, lambda_1 = {lam:.10g}")
    set_graph_context(None)
    return rows
