import os
import tempfile
import unittest

import numpy as np

from qmc_relax.Graphs.graph import Graph, GraphError, load_instance, save_instance
from qmc_relax.Graphs.lattices import (
    gen_square, gen_kagome, gen_shastry_sutherland, diagonal_edges
)
from qmc_relax.Graphs.erdosrenyi import gen_erdos_renyi
from qmc_relax.Graphs.disorder import apply_disorder
from qmc_relax.Graphs.edgelist import parse_edgelist, load_edgelist, save_edgelist
from test_instances import unit_edge, triangle, complete

class graphTest(unittest.TestCase):
    """Validation and conversions of the Graph type."""
    def test_canonical_order(self):
        g = Graph(3, [(2, 0, 1.0), (1, 0, 2.0)])
        assert(g.edges == [(0, 1, 2.0), (0, 2, 1.0)])
        assert(g.total_weight() == 3.0)
        assert(g.neighbours(0) == [1, 2])

    def test_invalid_edges(self):
        with self.assertRaises(GraphError):
            Graph(2, [(0, 0, 1.0)])
        with self.assertRaises(GraphError):
            Graph(2, [(0, 2, 1.0)])
        with self.assertRaises(GraphError):
            Graph(2, [(0, 1, -1.0)])
        with self.assertRaises(GraphError):
            Graph(3, [(0, 1, 1.0), (1, 0, 1.0)])

    def test_dict_round_trip(self):
        g = gen_square(3)
        h = Graph.from_dict(g.to_dict())
        assert(g == h)
        assert(h.meta["family"] == "square")

    def test_json_file(self):
        g = gen_kagome(2, 2)
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "kagome.json")
            save_instance(g, path)
            assert(load_instance(path) == g)

    def test_networkx(self):
        g = complete(5, 0.5)
        h = Graph.from_networkx(g.to_networkx())
        assert(h.edges == g.edges)

    def test_relabel(self):
        g = triangle()
        h = g.relabel([2, 0, 1])
        assert(h.edge_set() == g.edge_set())
        with self.assertRaises(GraphError):
            g.relabel([0, 0, 1])

class latticeTest(unittest.TestCase):
    """Sizes and coordination of the lattice generators."""
    def test_square_periodic(self):
        g = gen_square(4)
        assert(g.n == 16)
        assert(g.num_edges() == 32)
        for v in range(g.n):
            assert(len(g.neighbours(v)) == 4)

    def test_square_open(self):
        g = gen_square(4, periodic=False)
        assert(g.num_edges() == 24)

    def test_square_small(self):
        with self.assertRaises(GraphError):
            gen_square(1)

    def test_kagome(self):
        g = gen_kagome(3, 2)
        assert(g.n == 18)
        assert(g.num_edges() == 36)
        for v in range(g.n):
            assert(len(g.neighbours(v)) == 4)
        assert(len(g.coords) == 18)

    def test_kagome_single_cell_rejected(self):
        with self.assertRaises(GraphError):
            gen_kagome(1, 2)

    def test_shastry_sutherland(self):
        g = gen_shastry_sutherland(4, 0.4, 1.0)
        assert(g.n == 16)
        assert(g.num_edges() == 40)
        diag = diagonal_edges(g)
        assert(len(diag) == 8)
        covered = sorted(v for e in diag for v in e)
        assert(covered == list(range(16)))
        w = g.weight_dict()
        for e in diag:
            assert(w[e] == 1.0)
        assert(np.isclose(g.total_weight(), 32 * 0.4 + 8))

    def test_shastry_sutherland_zero_coupling(self):
        g = gen_shastry_sutherland(4, 0.0, 1.0)
        assert(g.num_edges() == 40)
        assert(g.total_weight() == 8.0)

    def test_shastry_sutherland_odd(self):
        with self.assertRaises(GraphError):
            gen_shastry_sutherland(3, 1.0, 1.0)

class erdosRenyiTest(unittest.TestCase):
    def test_complete(self):
        g = gen_erdos_renyi(10, 1.0, 7)
        assert(g.num_edges() == 45)

    def test_seeded(self):
        a = gen_erdos_renyi(12, 0.4, 3)
        b = gen_erdos_renyi(12, 0.4, 3)
        assert(a.edges == b.edges)
        assert(a.meta["seed"] == 3)

    def test_bad_probability(self):
        with self.assertRaises(GraphError):
            gen_erdos_renyi(5, 1.5, 0)

class disorderTest(unittest.TestCase):
    def test_zero_sigma(self):
        g = gen_square(3)
        h = apply_disorder(g, 0.0, 1)
        assert(h.edges == g.edges)

    def test_seeded_positive(self):
        g = gen_shastry_sutherland(4, 0.0, 1.0)
        a = apply_disorder(g, 0.5, 11)
        b = apply_disorder(g, 0.5, 11)
        assert(a.edges == b.edges)
        for (i, j, w), (_, _, w0) in zip(a.edges, g.edges):
            if w0 == 0.0:
                assert(w == 0.0)
            else:
                assert(w > 0.0)
        assert(a.meta["disorder_sigma"] == 0.5)

    def test_negative_sigma(self):
        with self.assertRaises(GraphError):
            apply_disorder(unit_edge(), -0.1, 0)

class edgelistTest(unittest.TestCase):
    def test_parse(self):
        g = parse_edgelist(["# n 4", "0 1 1.0", "", "1 2 0.5  # comment",
                            "# another comment", "2 3 2"])
        assert(g.n == 4)
        assert(g.edges == [(0, 1, 1.0), (1, 2, 0.5), (2, 3, 2.0)])

    def test_vertex_count_from_edges(self):
        g = parse_edgelist(["0 5 1"])
        assert(g.n == 6)

    def test_errors_carry_line_numbers(self):
        with self.assertRaises(GraphError) as cm:
            parse_edgelist(["0 1 1", "1 2"])
        assert("line 2" in str(cm.exception))
        with self.assertRaises(GraphError) as cm:
            parse_edgelist(["0 1 1", "# ok", "1 2 -1"])
        assert("line 3" in str(cm.exception))

    def test_file_round_trip(self):
        g = gen_erdos_renyi(8, 0.5, 2)
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "g.txt")
            save_edgelist(g, path)
            h = load_edgelist(path)
        assert(h.n == g.n and h.edges == g.edges)

if __name__ == "__main__":
    unittest.main()
