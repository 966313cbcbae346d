"""Tests for the metric-graph estimates."""
import unittest
from dataclasses import replace

from harness.families import FamilySpec, generate_family
from quantum import (
    check_conjecture,
    check_metric_cheeger_range,
    check_nicaise_bounds,
    metric_quantities
)
from quantum.fem import GeneralizedEigenResult
from reports.models import BoundStatus


class TestMetricBounds(unittest.TestCase):
    """Test range, sandwich and conjecture reports."""

    @classmethod
    def setUpClass(cls):
        """Compute quantities once per graph."""
        cls.interval = generate_family(FamilySpec("interval", length=2.0))
        cls.circle = generate_family(FamilySpec("cycle", 3))
        cls.dumbbell = generate_family(FamilySpec("dumbbell", 2, length=2.0, handle=0.5))
        cls.star = generate_family(FamilySpec("star", 3))
        cls.quantities = {
            name: metric_quantities(g)
            for name, g in (
                ("interval", cls.interval),
                ("circle", cls.circle),
                ("dumbbell", cls.dumbbell),
                ("star", cls.star)
            )
        }

    def test_interval_range_is_tight(self):
        """Test 2/L = h = 2E/L on an interval."""
        report = check_metric_cheeger_range(self.interval, self.quantities["interval"])
        self.assertEqual(report.status, BoundStatus.HOLDS)
        self.assertAlmostEqual(report.lhs, report.middle)
        self.assertAlmostEqual(report.rhs, report.middle)
        self.assertEqual(report.quantities["E"], 1)

    def test_loop_upper_not_applicable(self):
        """Test the upper range estimate is skipped when the reduction has a loop."""
        report = check_metric_cheeger_range(self.circle, self.quantities["circle"])
        self.assertEqual(report.upper_status, BoundStatus.NOT_APPLICABLE)
        self.assertEqual(report.lower_status, BoundStatus.HOLDS)
        self.assertEqual(report.status, BoundStatus.HOLDS)
        self.assertAlmostEqual(report.quantities["upper_bound"], 2.0 / 3.0)
        self.assertGreater(report.middle, report.rhs)

    def test_sandwich_equality_cases(self):
        """Test the interval and the circle sit on both sides of the sandwich."""
        for name, g in (("interval", self.interval), ("circle", self.circle)):
            smoothed, raw = check_nicaise_bounds(g, self.quantities[name])
            self.assertEqual(smoothed.inequality, "lambda1_sandwich")
            self.assertEqual(smoothed.status, BoundStatus.HOLDS, name)
            self.assertAlmostEqual(smoothed.lhs / smoothed.middle, 1.0, places=6)
            self.assertAlmostEqual(smoothed.rhs / smoothed.middle, 1.0, places=6)
            self.assertTrue(smoothed.assertable)
            self.assertFalse(raw.assertable)

    def test_raw_count_is_informational(self):
        """Test the raw edge count convention never counts as assertable."""
        _, raw = check_nicaise_bounds(self.circle, self.quantities["circle"])
        self.assertEqual(raw.inequality, "lambda1_sandwich_raw")
        self.assertEqual(raw.quantities["E"], 3)
        self.assertFalse(raw.is_assertable_violation)

    def test_raw_violation_is_logged(self):
        """Test a raw-count violation is logged as a warning and stays informational."""
        q = self.quantities["circle"]
        inflated = replace(q, spectrum=GeneralizedEigenResult(lambda1=1000.0, extrapolated=1000.0))
        with self.assertLogs("cheeger", level="WARNING") as logs:
            smoothed, raw = check_nicaise_bounds(self.circle, inflated)
        self.assertEqual(raw.status, BoundStatus.VIOLATED)
        self.assertEqual(smoothed.status, BoundStatus.VIOLATED)
        self.assertFalse(raw.is_assertable_violation)
        self.assertTrue(any("raw edge count E = 3" in line for line in logs.output))

    def test_dumbbell_and_star_hold(self):
        """Test the smoothed sandwich holds away from the equality cases."""
        for name, g in (("dumbbell", self.dumbbell), ("star", self.star)):
            smoothed, _ = check_nicaise_bounds(g, self.quantities[name])
            self.assertEqual(smoothed.status, BoundStatus.HOLDS, name)
            self.assertGreater(smoothed.slack, 0.0)

    def test_conjecture_not_assertable(self):
        """Test the conjectured estimate is reported but never asserted."""
        for name, g in (("interval", self.interval), ("star", self.star), ("dumbbell", self.dumbbell)):
            report = check_conjecture(g, self.quantities[name])
            self.assertEqual(report.inequality, "conjecture")
            self.assertFalse(report.assertable)
            self.assertFalse(report.is_assertable_violation)
            self.assertEqual(report.upper_status, BoundStatus.NOT_APPLICABLE)

    def test_quantities(self):
        """Test the shared quantities."""
        q = self.quantities["dumbbell"]
        self.assertEqual(q.h, 1.0)
        self.assertEqual(q.essential_edges, 5)
        self.assertEqual(q.length, 2.0)
        self.assertEqual(len(q.digest), 64)


if __name__ == "__main__":
    unittest.main()
