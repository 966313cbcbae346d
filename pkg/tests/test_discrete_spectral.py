"""Tests for the discrete Laplacian, exact Cheeger constant and their estimates."""
import itertools
import math
import unittest
from fractions import Fraction

import numpy as np

from graphs import DiscreteGraph
from harness.ensembles import discrete_ensemble
from reports.models import BoundStatus
from spectral import (
    SymmetricMatrix,
    check_alon_milman,
    check_fiedler_bounds,
    cyclic_jacobi,
    discrete_cheeger,
    fiedler_value,
    laplacian_matrix,
    laplacian_spectrum,
    symmetric_eigenvalues,
    zero_eigenvalue_multiplicity
)
from spectral.linalg import smallest_eigenpair_residual
from utils.exceptions import DisconnectedGraphError, GraphError, ValidationError


def graph(n: int, pairs) -> DiscreteGraph:
    return DiscreteGraph([f"v{i}" for i in range(n)], [(f"v{i}", f"v{j}") for i, j in pairs])


def cycle(n: int) -> DiscreteGraph:
    return graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> DiscreteGraph:
    return graph(n, itertools.combinations(range(n), 2))


def brute_force_cheeger(g: DiscreteGraph) -> Fraction:
    vertices = list(g.vertices)
    n = len(vertices)
    best = None
    for size in range(1, n):
        for subset in itertools.combinations(vertices, size):
            inside = set(subset)
            boundary = sum(1 for u, v in g.edges if (u in inside) != (v in inside))
            ratio = Fraction(boundary, min(size, n - size))
            if best is None or ratio < best:
                best = ratio
    return best


class TestLaplacian(unittest.TestCase):
    """Test Laplacian assembly and spectra."""

    def test_path_laplacian(self):
        """Test L = D - A on a path of three vertices."""
        lap = laplacian_matrix(graph(3, [(0, 1), (1, 2)]))
        self.assertEqual(lap.to_list(), [[1.0, -1.0, 0.0], [-1.0, 2.0, -1.0], [0.0, -1.0, 1.0]])

    def test_parallel_edges(self):
        """Test multiplicities add to degree and adjacency."""
        lap = laplacian_matrix(graph(2, [(0, 1), (0, 1)]))
        self.assertEqual(lap.to_list(), [[2.0, -2.0], [-2.0, 2.0]])

    def test_constant_vector_is_kernel(self):
        """Test L 1 = 0 for a random-looking graph."""
        g = graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (1, 3)])
        self.assertEqual(smallest_eigenpair_residual(laplacian_matrix(g)), 0.0)

    def test_path_spectrum(self):
        """Test the spectrum of P3 is 0, 1, 3."""
        spectrum = laplacian_spectrum(graph(3, [(0, 1), (1, 2)]))
        for got, expected in zip(spectrum, [0.0, 1.0, 3.0]):
            self.assertAlmostEqual(got, expected, places=10)

    def test_cycle_and_complete(self):
        """Test closed forms for cycles and complete graphs."""
        for n in (3, 5, 8):
            self.assertAlmostEqual(fiedler_value(cycle(n)), 2.0 - 2.0 * math.cos(2.0 * math.pi / n), places=10)
            self.assertAlmostEqual(fiedler_value(complete(n)), float(n), places=10)

    def test_zero_multiplicity_counts_components(self):
        """Test the kernel dimension equals the component count."""
        g = graph(5, [(0, 1), (2, 3)])
        self.assertEqual(zero_eigenvalue_multiplicity(g), 3)

    def test_fiedler_guards(self):
        """Test the Fiedler value needs a connected graph with two vertices."""
        with self.assertRaises(GraphError):
            fiedler_value(DiscreteGraph(["a"], []))
        with self.assertRaises(DisconnectedGraphError):
            fiedler_value(graph(3, [(0, 1)]))


class TestEigenvalueKernels(unittest.TestCase):
    """Test Jacobi sweeps against LAPACK."""

    def setUp(self):
        """Set up test fixtures."""
        rng = np.random.default_rng(7)
        a = rng.normal(size=(12, 12))
        self.matrix = SymmetricMatrix(a + a.T)

    def test_methods_agree(self):
        """Test both methods return the same sorted spectrum."""
        jacobi = symmetric_eigenvalues(self.matrix, method="jacobi")
        lapack = symmetric_eigenvalues(self.matrix, method="lapack")
        np.testing.assert_allclose(jacobi, lapack, rtol=0, atol=1e-9)
        self.assertEqual(jacobi, sorted(jacobi))

    def test_lower_triangle_authoritative(self):
        """Test the upper triangle is mirrored from the lower one."""
        m = SymmetricMatrix([[1.0, 99.0], [2.0, 3.0]])
        self.assertEqual(m.to_list(), [[1.0, 2.0], [2.0, 3.0]])

    def test_diagonal_and_scalar(self):
        """Test trivial inputs."""
        self.assertEqual(list(cyclic_jacobi(np.array([[4.0]]))), [4.0])
        self.assertEqual(symmetric_eigenvalues(SymmetricMatrix(np.diag([3.0, 1.0, 2.0]))), [1.0, 2.0, 3.0])

    def test_rejects_bad_input(self):
        """Test shape, finiteness and method checks."""
        with self.assertRaises(ValidationError):
            SymmetricMatrix([[1.0, 2.0, 3.0]])
        with self.assertRaises(ValidationError):
            symmetric_eigenvalues(SymmetricMatrix([[math.nan]]))
        with self.assertRaises(ValidationError):
            symmetric_eigenvalues(self.matrix, method="qr")


class TestDiscreteCheeger(unittest.TestCase):
    """Test exact h(G) by subset enumeration."""

    def test_known_values(self):
        """Test paths, cycles and complete graphs."""
        self.assertEqual(discrete_cheeger(graph(4, [(0, 1), (1, 2), (2, 3)])).value, Fraction(1, 2))
        self.assertEqual(discrete_cheeger(cycle(6)).value, Fraction(2, 3))
        self.assertEqual(discrete_cheeger(complete(4)).value, Fraction(2))
        self.assertEqual(discrete_cheeger(cycle(5)).value, Fraction(1))
        butterfly = graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
        self.assertEqual(discrete_cheeger(butterfly).value, Fraction(1))

    def test_against_brute_force(self):
        """Test agreement with a direct enumeration on assorted graphs."""
        graphs = [
            cycle(5),
            complete(5),
            graph(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]),
            graph(7, [(0, i) for i in range(1, 7)]),
            graph(4, [(0, 1), (0, 1), (1, 2), (2, 3), (3, 0)]),
        ]
        for g in graphs:
            self.assertEqual(discrete_cheeger(g).value, brute_force_cheeger(g))

    def test_witness_attains_value(self):
        """Test the witness set reproduces h and contains the smallest vertex."""
        g = graph(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])
        result = discrete_cheeger(g)
        inside = set(result.witness_set)
        boundary = sum(1 for u, v in g.edges if (u in inside) != (v in inside))
        self.assertEqual(boundary, result.boundary_size)
        self.assertEqual(Fraction(boundary, result.denominator), result.value)
        self.assertIn("v0", inside)
        self.assertEqual(result.to_dict()["h_exact"], "1/3")

    def test_guards(self):
        """Test small and disconnected inputs are rejected."""
        with self.assertRaises(GraphError):
            discrete_cheeger(DiscreteGraph(["a"], []))
        with self.assertRaises(DisconnectedGraphError):
            discrete_cheeger(graph(4, [(0, 1), (2, 3)]))


class TestDiscreteBounds(unittest.TestCase):
    """Test the Fiedler and Alon-Milman reports."""

    def test_cycle_holds(self):
        """Test both estimates hold on a cycle."""
        g = cycle(6)
        self.assertEqual(check_fiedler_bounds(g).status, BoundStatus.HOLDS)
        report = check_alon_milman(g)
        self.assertEqual(report.status, BoundStatus.HOLDS)
        self.assertGreaterEqual(report.slack, 0.0)

    def test_complete_upper_not_applicable(self):
        """Test the Fiedler upper estimate is skipped on complete graphs."""
        report = check_fiedler_bounds(complete(4))
        self.assertEqual(report.upper_status, BoundStatus.NOT_APPLICABLE)
        self.assertEqual(report.lower_status, BoundStatus.HOLDS)
        self.assertEqual(report.status, BoundStatus.HOLDS)

    def test_parallel_edges_upper_not_applicable(self):
        """Test a doubled edge skips the upper estimate it would exceed."""
        g = DiscreteGraph(["a", "b", "c"], [("a", "c"), ("c", "b"), ("c", "b")])
        self.assertTrue(g.has_parallel_edges)
        report = check_fiedler_bounds(g)
        self.assertGreater(report.middle, report.rhs)
        self.assertEqual(report.upper_status, BoundStatus.NOT_APPLICABLE)
        self.assertEqual(report.lower_status, BoundStatus.HOLDS)
        self.assertEqual(report.status, BoundStatus.HOLDS)
        self.assertIn("parallel edges", report.note)
        self.assertFalse(cycle(4).has_parallel_edges)

    def test_two_vertices_not_applicable(self):
        """Test the Fiedler report on a single edge is not-applicable."""
        report = check_fiedler_bounds(graph(2, [(0, 1)]))
        self.assertEqual(report.status, BoundStatus.NOT_APPLICABLE)
        self.assertFalse(report.is_assertable_violation)
        self.assertIsNone(report.slack)

    def test_reports_carry_quantities(self):
        """Test reports record their inputs and a graph digest."""
        report = check_alon_milman(complete(5))
        self.assertEqual(report.quantities["deg_max"], 4)
        self.assertAlmostEqual(report.quantities["h"], 3.0)
        self.assertEqual(len(report.digest), 64)
        self.assertEqual(report.to_dict()["inequality"], "alon_milman")


class TestRelabeling(unittest.TestCase):
    """Test spectral and Cheeger values do not depend on vertex names."""

    def test_reversed_names_over_ensemble(self):
        """Test h exactly and lambda_1 to 1e-10 after reversing vertex order."""
        for member in discrete_ensemble(20, 42):
            g = member.graph
            n = g.vertex_count
            mapping = {v: f"w{n - 1 - i}" for i, v in enumerate(g.vertices)}
            renamed = g.relabeled(mapping)
            self.assertNotEqual(renamed.vertices, g.vertices)
            self.assertEqual(discrete_cheeger(renamed).value, discrete_cheeger(g).value)
            self.assertAlmostEqual(fiedler_value(renamed), fiedler_value(g), delta=1e-10)

    def test_witness_maps_back(self):
        """Test the renamed witness is a minimizer of the original graph."""
        g = graph(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])
        mapping = {v: f"w{5 - i}" for i, v in enumerate(g.vertices)}
        inverse = {new: old for old, new in mapping.items()}
        result = discrete_cheeger(g.relabeled(mapping))
        inside = {inverse[v] for v in result.witness_set}
        boundary = sum(1 for u, v in g.edges if (u in inside) != (v in inside))
        self.assertEqual(Fraction(boundary, min(len(inside), 6 - len(inside))), Fraction(1, 3))


if __name__ == "__main__":
    unittest.main()
