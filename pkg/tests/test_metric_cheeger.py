"""Tests for cut configurations, the exact metric Cheeger constant and the grid oracle."""
import unittest
from fractions import Fraction

import numpy as np

from graphs import MetricEdge, MetricGraph, scale_lengths, subdivide_edge, total_length
from harness.ensembles import metric_ensemble
from harness.families import FamilySpec, generate_family
from quantum import (
    CutConfiguration,
    Side,
    components_after_cuts,
    evaluate_configuration,
    grid_cheeger_exact,
    metric_cheeger,
    metric_cheeger_grid_oracle
)
from utils.exceptions import (
    DisconnectedGraphError,
    GuardExceededError,
    IneffectiveCutError,
    ValidationError
)


def uneven_triangle() -> MetricGraph:
    """Cycle of lengths 1, 1, 0.5; the optimum needs a cut at a quarter of the short edge."""
    return MetricGraph(
        ["a", "b", "c"],
        [MetricEdge("e0", "a", "b", 1.0), MetricEdge("e1", "b", "c", 1.0), MetricEdge("e2", "c", "a", 0.5)]
    )


def random_four_edge_graph(seed: int) -> MetricGraph:
    """Path a-b-c plus two random edges, loops and parallels allowed, lengths in [0.2, 2]."""
    rng = np.random.default_rng(seed)
    names = ["a", "b", "c"]
    pairs = [("a", "b"), ("b", "c")]
    for _ in range(2):
        i, j = (int(x) for x in rng.integers(3, size=2))
        pairs.append((names[i], names[j]))
    lengths = rng.uniform(0.2, 2.0, size=len(pairs))
    edges = [MetricEdge(f"e{i}", u, v, float(ell)) for i, ((u, v), ell) in enumerate(zip(pairs, lengths))]
    return MetricGraph(names, edges, f"four-edge-{seed}")


def witness_measure(g: MetricGraph, result) -> float:
    """Measure of S rebuilt from the reported cut points and coloring."""
    pattern = result.configuration.cuts_per_edge
    structure = components_after_cuts(g, pattern)
    coloring = result.configuration.coloring
    positions = {}
    for cut in result.cuts:
        positions.setdefault(cut.edge, []).append(cut.t)

    measure = 0.0
    for edge, cuts in zip(g.edges, pattern):
        first = coloring[structure.vertex_component[edge.u]]
        if cuts == 0:
            if first == Side.IN_S:
                measure += edge.length
            continue
        bounds = [0.0] + sorted(positions[edge.id]) + [edge.length]
        for p in range(cuts + 1):
            in_s = (first == Side.IN_S) == (p % 2 == 0)
            if in_s:
                measure += bounds[p + 1] - bounds[p]
    return measure


class TestCutStructure(unittest.TestCase):
    """Test components_after_cuts and evaluate_configuration."""

    def setUp(self):
        """Set up test fixtures."""
        self.c5 = generate_family(FamilySpec("cycle", 5))
        self.interval = generate_family(FamilySpec("interval"))

    def test_cycle_classes(self):
        """Test two cuts split C5 into two vertex classes."""
        structure = components_after_cuts(self.c5, (1, 0, 1, 0, 0))
        self.assertEqual(len(structure), 2)
        self.assertEqual(structure.components[0].vertices, ("v0", "v3", "v4"))
        self.assertEqual(structure.components[1].vertices, ("v1", "v2"))
        self.assertEqual(structure.components[0].fixed_measure, 2.0)
        self.assertEqual(structure.components[1].fixed_measure, 1.0)

    def test_floating_fragment(self):
        """Test two cuts on one edge leave a floating middle piece."""
        structure = components_after_cuts(self.interval, (2,))
        self.assertEqual(len(structure), 3)
        middle = structure.components[2]
        self.assertTrue(middle.is_floating)
        self.assertEqual(middle.describe(), {"edge": "e0", "fragment": 1})
        self.assertEqual(structure.fragment_component[(0, 1)], 2)
        self.assertEqual(structure.components[0].describe(), {"vertices": ["v0"]})

    def test_cuts_on_cycles(self):
        """Test one cut does not disconnect a cycle and two cuts on a loop leave two pieces."""
        self.assertEqual(len(components_after_cuts(self.c5, (1, 0, 0, 0, 0))), 1)
        self.assertEqual(len(components_after_cuts(self.c5, (1, 1, 0, 0, 0))), 2)
        loop = generate_family(FamilySpec("flower", 1))
        self.assertEqual(len(components_after_cuts(loop, (2,))), 2)

    def test_bad_multiplicities(self):
        """Test length, sign and total of the multiplicities are checked."""
        for pattern in ((1, 0), (0, 0, 0, 0, 0), (1, -1, 0, 0, 1)):
            with self.assertRaises(ValidationError):
                components_after_cuts(self.c5, pattern)

    def test_evaluate_cycle(self):
        """Test the optimal balancing of the two-cut C5 configuration."""
        config = CutConfiguration((1, 0, 1, 0, 0), (Side.IN_S, Side.IN_COMPLEMENT))
        evaluation = evaluate_configuration(self.c5, config)
        self.assertEqual(evaluation.ratio, Fraction(4, 5))
        self.assertEqual((evaluation.s_min, evaluation.s_max), (2.0, 4.0))
        self.assertEqual(evaluation.s_opt, 2.5)
        self.assertEqual(evaluation.denominator, 2.5)
        self.assertTrue(evaluation.feasible)

    def test_evaluate_floating_piece(self):
        """Test an interval piece cut out of the middle of an edge."""
        config = CutConfiguration((2,), ("S", "S", "S^c"))
        evaluation = evaluate_configuration(self.interval, config)
        self.assertEqual(evaluation.ratio, Fraction(4))
        self.assertEqual(evaluation.s_opt, 0.5)

    def test_ineffective_cut(self):
        """Test equal colors across a cut are rejected."""
        config = CutConfiguration((1, 0, 1, 0, 0), (Side.IN_S, Side.IN_S))
        with self.assertRaises(IneffectiveCutError):
            evaluate_configuration(self.c5, config)

    def test_coloring_length_mismatch(self):
        """Test the coloring must cover every component."""
        with self.assertRaises(ValidationError):
            evaluate_configuration(self.c5, CutConfiguration((1, 0, 1, 0, 0), (Side.IN_S,)))

    def test_side_codes(self):
        """Test Side codes and encoding order."""
        self.assertEqual(Side.from_code(1), Side.IN_COMPLEMENT)
        config = CutConfiguration((2,), ("S", "S", "S^c"))
        self.assertEqual(config.encoding(), (2, (2,), (0, 0, 1)))


class TestMetricCheeger(unittest.TestCase):
    """Test exact h by cut enumeration."""

    def test_cycle(self):
        """Test C5 with unit edges has h = 4/5."""
        result = metric_cheeger(generate_family(FamilySpec("cycle", 5)))
        self.assertEqual(result.exact, Fraction(4, 5))
        self.assertEqual(result.k, 2)
        self.assertEqual(result.attained_measure, 2.5)
        self.assertEqual(result.to_dict()["h_exact"], "4/5")

    def test_butterfly(self):
        """Test two triangles sharing a vertex have h = 2/3."""
        result = metric_cheeger(generate_family(FamilySpec("butterfly")))
        self.assertEqual(result.exact, Fraction(2, 3))

    def test_interval(self):
        """Test h = 2/L on an interval."""
        for length in (0.5, 1.0, 2.0):
            result = metric_cheeger(generate_family(FamilySpec("interval", length=length)))
            self.assertEqual(result.value, 2.0 / length)
            self.assertEqual(result.k, 1)

    def test_flower(self):
        """Test h = 2E/L for flowers with at least two petals, 4/L for a single loop."""
        for petals in (2, 4):
            result = metric_cheeger(generate_family(FamilySpec("flower", petals, length=1.0)))
            self.assertEqual(result.exact, Fraction(2 * petals))
        for petals in (3, 5):
            result = metric_cheeger(generate_family(FamilySpec("flower", petals, length=1.0)))
            self.assertAlmostEqual(result.value, 2.0 * petals, delta=1e-12 * petals)
        self.assertEqual(metric_cheeger(generate_family(FamilySpec("flower", 1, length=2.0))).value, 2.0)

    def test_dumbbell(self):
        """Test one cut through the handle balances the dumbbell."""
        for m in (1, 2, 3):
            g = generate_family(FamilySpec("dumbbell", m, length=2.0, handle=0.5))
            result = metric_cheeger(g)
            self.assertEqual(result.exact, Fraction(1))
            self.assertEqual(result.k, 1)
            self.assertEqual(result.cuts[0].edge, g.edges[m].id)

    def test_star(self):
        """Test a unit star with three rays has h = 1."""
        self.assertEqual(metric_cheeger(generate_family(FamilySpec("star", 3))).exact, Fraction(1))

    def test_uneven_triangle(self):
        """Test the balancing point need not be a vertex or midpoint."""
        self.assertEqual(metric_cheeger(uneven_triangle()).exact, Fraction(8, 5))

    def test_witness_attains_value(self):
        """Test cut positions reproduce the attained measure and the ratio."""
        graphs = [
            generate_family(FamilySpec("cycle", 5)),
            generate_family(FamilySpec("butterfly")),
            generate_family(FamilySpec("dumbbell", 2, length=2.0, handle=0.5)),
            generate_family(FamilySpec("star", 3)),
            uneven_triangle(),
        ]
        for g in graphs:
            result = metric_cheeger(g)
            measure = witness_measure(g, result)
            d = min(measure, total_length(g) - measure)
            self.assertAlmostEqual(d, result.attained_measure, places=12)
            self.assertAlmostEqual(result.k / d, result.value, places=12)

    def test_witness_positions_fill_in_edge_order(self):
        """Test the balancing slack goes to the first cut edge before the next."""
        result = metric_cheeger(generate_family(FamilySpec("cycle", 5)))
        self.assertEqual(result.configuration.cuts_per_edge, (0, 0, 1, 0, 1))
        self.assertEqual([(c.edge, c.t) for c in result.cuts], [("e2", 0.5), ("e4", 1.0)])
        self.assertEqual(result.attained_measure, 2.5)

    def test_configuration_reevaluates(self):
        """Test the witness configuration evaluates to the same ratio."""
        for g in (generate_family(FamilySpec("cycle", 5)), uneven_triangle()):
            result = metric_cheeger(g)
            self.assertEqual(evaluate_configuration(g, result.configuration).ratio, result.exact)

    def test_scaling(self):
        """Test h(c G) = h(G) / c."""
        g = generate_family(FamilySpec("cycle", 5))
        self.assertEqual(metric_cheeger(scale_lengths(g, 0.5)).exact, Fraction(8, 5))
        self.assertEqual(metric_cheeger(scale_lengths(g, 4.0)).exact, Fraction(1, 5))

    def test_degree_two_insertion(self):
        """Test inserting a degree-2 vertex leaves h unchanged."""
        for g, edge in ((generate_family(FamilySpec("star", 3)), "e1"), (uneven_triangle(), "e2")):
            self.assertEqual(metric_cheeger(subdivide_edge(g, edge)).exact, metric_cheeger(g).exact)

    def test_more_cuts_do_not_help(self):
        """Test allowing three cuts per edge gives the same h."""
        for g in (generate_family(FamilySpec("cycle", 5)), generate_family(FamilySpec("butterfly"))):
            self.assertEqual(metric_cheeger(g, max_cuts_per_edge=3).exact, metric_cheeger(g).exact)

    def test_lower_estimate_over_ensemble(self):
        """Test h >= 2 / L on seeded random metric graphs."""
        for member in metric_ensemble(12, 42):
            g = member.graph
            self.assertGreaterEqual(metric_cheeger(g).value, 2.0 / total_length(g) * (1.0 - 1e-12), msg=g.name)

    def test_more_cuts_over_ensemble(self):
        """Test three cuts per edge never beat two on seeded random metric graphs."""
        for member in metric_ensemble(12, 42):
            g = member.graph
            self.assertEqual(
                metric_cheeger(g, max_cuts_per_edge=3).exact,
                metric_cheeger(g, max_cuts_per_edge=2).exact,
                msg=g.name
            )

    def test_degree_two_insertion_over_ensemble(self):
        """Test halving the first edge keeps h and the attained measure."""
        for member in metric_ensemble(12, 42):
            g = member.graph
            before = metric_cheeger(g)
            after = metric_cheeger(subdivide_edge(g, g.edges[0].id, fraction=0.5))
            self.assertEqual(after.exact, before.exact, msg=g.name)
            self.assertAlmostEqual(after.attained_measure, before.attained_measure, places=12, msg=g.name)

    def test_guards(self):
        """Test edge guard, connectivity and cut bound."""
        with self.assertRaises(GuardExceededError):
            metric_cheeger(generate_family(FamilySpec("cycle", 11)))
        with self.assertRaises(DisconnectedGraphError):
            metric_cheeger(MetricGraph(["a", "b", "c"], [MetricEdge("e0", "a", "b", 1.0)]))
        with self.assertRaises(ValidationError):
            metric_cheeger(generate_family(FamilySpec("interval")), max_cuts_per_edge=0)


class TestGridOracle(unittest.TestCase):
    """Test the grid-restricted reference computation."""

    def test_agrees_on_families(self):
        """Test the oracle reaches h when the grid holds an optimal witness."""
        for g in (
            generate_family(FamilySpec("cycle", 5)),
            generate_family(FamilySpec("butterfly")),
            generate_family(FamilySpec("star", 3)),
            generate_family(FamilySpec("interval", length=2.0)),
        ):
            self.assertEqual(grid_cheeger_exact(g, 10), metric_cheeger(g).exact)

    def test_odd_grid_misses_midpoint(self):
        """Test an interval needs its midpoint on the grid."""
        g = generate_family(FamilySpec("interval"))
        self.assertEqual(metric_cheeger_grid_oracle(g, 2), 2.0)
        self.assertEqual(metric_cheeger_grid_oracle(g, 4), 2.0)
        self.assertEqual(grid_cheeger_exact(g, 3), Fraction(3))

    def test_endpoint_cuts_on_coarse_grid(self):
        """Test the butterfly optimum only needs cuts at edge ends."""
        self.assertEqual(grid_cheeger_exact(generate_family(FamilySpec("butterfly")), 3), Fraction(2, 3))

    def test_nested_grids_are_monotone(self):
        """Test refining the grid never increases the value and never undercuts h."""
        g = uneven_triangle()
        h = metric_cheeger(g).exact
        coarse, middle, fine = (grid_cheeger_exact(g, n) for n in (5, 10, 20))
        self.assertGreater(coarse, h)
        self.assertGreaterEqual(coarse, middle)
        self.assertGreaterEqual(middle, fine)
        self.assertEqual(middle, h)
        self.assertEqual(fine, h)

    def test_random_four_edge_graphs_converge(self):
        """Test grid values on 5, 10 and 20 points decrease toward h from above."""
        for seed in range(6):
            g = random_four_edge_graph(seed)
            h = metric_cheeger(g).exact
            values = [grid_cheeger_exact(g, n) for n in (5, 10, 20)]
            for value in values:
                self.assertGreaterEqual(value, h, msg=f"seed {seed}")
            self.assertGreaterEqual(values[0] - h, values[1] - h, msg=f"seed {seed}")
            self.assertGreaterEqual(values[1] - h, values[2] - h, msg=f"seed {seed}")
            self.assertAlmostEqual(metric_cheeger_grid_oracle(g, 20), float(values[2]), places=12)

    def test_guards(self):
        """Test edge and grid size limits."""
        with self.assertRaises(GuardExceededError):
            grid_cheeger_exact(generate_family(FamilySpec("cycle", 7)), 4)
        with self.assertRaises(ValidationError):
            grid_cheeger_exact(generate_family(FamilySpec("interval")), 0)
        with self.assertRaises(ValidationError):
            grid_cheeger_exact(generate_family(FamilySpec("interval")), 21)


if __name__ == "__main__":
    unittest.main()
