"""Tests for graph file ingestion."""
import json
import shutil
import tempfile
import unittest
from pathlib import Path

from graphs import DiscreteGraph, MetricGraph, parse_graph_file, parse_graph_text, write_graph_file
from harness.families import FamilySpec, generate_family
from utils.exceptions import InputError


class TestGraphLoader(unittest.TestCase):
    """Test parse_graph_text and parse_graph_file functionality."""

    def setUp(self):
        """Set up test fixtures."""
        self.temp_dir = tempfile.mkdtemp()

    def tearDown(self):
        """Clean up test fixtures."""
        shutil.rmtree(self.temp_dir)

    def test_metric_graph(self):
        """Test a metric file with explicit ids and lengths."""
        text = json.dumps({
            "vertices": ["a", "b"],
            "edges": [{"id": "x", "u": "a", "v": "b", "length": 2.5}, {"id": "y", "u": "b", "v": "b", "length": 1}]
        })
        g = parse_graph_text(text)
        self.assertIsInstance(g, MetricGraph)
        self.assertEqual(g.lengths, [2.5, 1.0])
        self.assertTrue(g.edge("y").is_loop)

    def test_missing_id_numbered(self):
        """Test a missing id becomes e<index>."""
        text = json.dumps({"vertices": ["a", "b"], "edges": [{"u": "a", "v": "b", "length": 1.5}]})
        g = parse_graph_text(text)
        self.assertEqual(g.edges[0].id, "e0")
        self.assertEqual(g.edges[0].length, 1.5)

    def test_missing_length_rejected(self):
        """Test a metric edge without a length reports its position."""
        text = json.dumps({
            "vertices": ["a", "b"],
            "edges": [{"id": "x", "u": "a", "v": "b", "length": 1.0}, {"u": "b", "v": "a"}]
        })
        with self.assertRaises(InputError) as ctx:
            parse_graph_text(text, source="g.json")
        self.assertIn("g.json: edges[1] (edge 'e1'): length required on the metric side", str(ctx.exception))
        self.assertEqual(parse_graph_text(text, kind="discrete").edge_count, 2)

    def test_discrete_ignores_lengths(self):
        """Test the discrete side keeps only endpoints."""
        text = json.dumps({"vertices": ["a", "b"], "edges": [{"u": "a", "v": "b", "length": 7.0}]})
        g = parse_graph_text(text, kind="discrete")
        self.assertIsInstance(g, DiscreteGraph)
        self.assertEqual(g.edges, (("a", "b"),))

    def test_discrete_loop_rejected(self):
        """Test a loop is an input error on the discrete side."""
        text = json.dumps({"vertices": ["a", "b"], "edges": [{"u": "a", "v": "a"}, {"u": "a", "v": "b"}]})
        with self.assertRaises(InputError) as ctx:
            parse_graph_text(text, kind="discrete")
        self.assertIn("loop forbidden on discrete side", str(ctx.exception))

    def test_negative_length_names_edge(self):
        """Test a nonpositive length reports the edge position and id."""
        text = json.dumps({
            "vertices": ["a", "b"],
            "edges": [{"id": "ok", "u": "a", "v": "b", "length": 1.0}, {"id": "bad", "u": "a", "v": "b", "length": -1}]
        })
        with self.assertRaises(InputError) as ctx:
            parse_graph_text(text)
        self.assertIn("edges[1] (edge 'bad'): length must be positive", str(ctx.exception))

    def test_duplicate_vertex(self):
        """Test duplicate vertex ids are rejected."""
        text = json.dumps({"vertices": ["a", "a", "b"], "edges": [{"u": "a", "v": "b"}]})
        with self.assertRaises(InputError) as ctx:
            parse_graph_text(text)
        self.assertIn("duplicate vertex", str(ctx.exception))

    def test_undeclared_endpoint(self):
        """Test an endpoint outside the vertex list is rejected."""
        text = json.dumps({"vertices": ["a"], "edges": [{"u": "a", "v": "z", "length": 1.0}]})
        with self.assertRaises(InputError) as ctx:
            parse_graph_text(text)
        self.assertIn("'z'", str(ctx.exception))

    def test_syntax_error_position(self):
        """Test malformed JSON reports line and column."""
        with self.assertRaises(InputError) as ctx:
            parse_graph_text('{"vertices": ["a"],\n "edges": [}', source="broken.json")
        message = str(ctx.exception)
        self.assertTrue(message.startswith("broken.json: line 2 column"))

    def test_schema_error_position(self):
        """Test schema errors carry a JSON path."""
        text = json.dumps({"vertices": ["a", "b"], "edges": [{"u": "a", "v": "b", "weight": 3}]})
        with self.assertRaises(InputError) as ctx:
            parse_graph_text(text)
        self.assertIn("edges[0].weight", str(ctx.exception))

    def test_unknown_kind(self):
        """Test the kind argument is checked."""
        with self.assertRaises(InputError):
            parse_graph_text('{"vertices": [], "edges": []}', kind="quantum")

    def test_missing_file(self):
        """Test an unreadable path is an input error."""
        with self.assertRaises(InputError):
            parse_graph_file(Path(self.temp_dir) / "missing.json")

    def test_file_round_trip(self):
        """Test a written family reads back with the file stem as name."""
        g = generate_family(FamilySpec("dumbbell", 2, length=2.0, handle=0.5))
        path = Path(self.temp_dir) / "dumbbell.json"
        write_graph_file(g, path)
        loaded = parse_graph_file(path)
        self.assertEqual(loaded.name, "dumbbell")
        self.assertEqual(loaded.edges, g.edges)
        self.assertEqual(loaded.vertices, g.vertices)


if __name__ == "__main__":
    unittest.main()
