"""Tests for the bitset graph and derived constructions in graph.py"""

import unittest

import networkx as nx

from treecover_lab.errors import PreconditionError
from treecover_lab.graph import (
    Graph,
    bit,
    complement,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    iter_bits,
    line_graph,
    path_graph,
    petersen_graph,
    popcount,
    star_graph,
    to_list,
    to_mask,
    triangle_augment,
    vertex_sum,
)


class TestVertexSets(unittest.TestCase):
    """Test the bitset helpers."""

    def test_mask_round_trip(self):
        """Test converting between vertex lists and masks."""
        mask = to_mask([5, 0, 3])
        self.assertEqual(mask, 0b101001)
        self.assertEqual(to_list(mask), [0, 3, 5])
        self.assertEqual(popcount(mask), 3)

    def test_iter_bits_high_vertex(self):
        """Test that vertex 63 is iterated correctly."""
        self.assertEqual(list(iter_bits(bit(63) | bit(1))), [1, 63])


class TestGraphConstruction(unittest.TestCase):
    """Test building graphs and rejecting malformed input."""

    def test_from_edges_counts(self):
        """Test vertex and edge counts of a small graph."""
        g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
        self.assertEqual(g.n, 4)
        self.assertEqual(g.m, 4)
        self.assertEqual(g.degrees(), [2, 2, 3, 1])
        self.assertEqual(g.edges(), [(0, 1), (0, 2), (1, 2), (2, 3)])

    def test_repeated_edges_are_idempotent(self):
        """Test that listing an edge twice adds it once."""
        g = Graph.from_edges(2, [(0, 1), (1, 0)])
        self.assertEqual(g.m, 1)

    def test_loop_rejected(self):
        """Test that loops are rejected."""
        with self.assertRaises(PreconditionError):
            Graph.from_edges(3, [(1, 1)])

    def test_out_of_range_rejected(self):
        """Test that edges outside 0..n-1 are rejected."""
        with self.assertRaises(PreconditionError):
            Graph.from_edges(3, [(0, 3)])

    def test_too_many_vertices(self):
        """Test the 64-vertex limit."""
        Graph.empty(64)
        with self.assertRaises(PreconditionError):
            Graph.empty(65)

    def test_asymmetric_adjacency_rejected(self):
        """Test that a one-sided adjacency row is rejected."""
        with self.assertRaises(PreconditionError):
            Graph(2, (0b10, 0))

    def test_networkx_round_trip(self):
        """Test conversion to and from networkx with arbitrary labels."""
        nxg = nx.Graph([("b", "a"), ("a", "c")])
        g, labels = Graph.from_networkx(nxg)
        self.assertEqual(labels, ("a", "b", "c"))
        self.assertEqual(g.edges(), [(0, 1), (0, 2)])
        self.assertTrue(nx.is_isomorphic(g.to_networkx(), nxg))


class TestGraphQueries(unittest.TestCase):
    """Test connectivity, forest and clique queries."""

    def test_components_ordered_by_smallest_vertex(self):
        """Test component listing order."""
        g = Graph.from_edges(5, [(3, 4), (0, 2)])
        self.assertEqual(g.components(), [to_mask([0, 2]), to_mask([1]), to_mask([3, 4])])
        self.assertFalse(g.is_connected())

    def test_empty_set_is_connected_but_not_a_tree(self):
        """Test the conventions for the empty vertex set."""
        g = path_graph(3)
        self.assertTrue(g.is_connected(0))
        self.assertFalse(g.is_tree(0))

    def test_tree_and_forest(self):
        """Test tree and forest recognition on induced subgraphs."""
        g = cycle_graph(4)
        self.assertFalse(g.is_forest())
        self.assertTrue(g.is_tree(to_mask([0, 1, 2])))
        self.assertTrue(g.is_forest(to_mask([0, 2])))
        self.assertFalse(g.is_tree(to_mask([0, 2])))

    def test_clique_and_independent(self):
        """Test clique and independent set checks."""
        g = complete_graph(4)
        self.assertTrue(g.is_clique())
        self.assertFalse(g.is_independent(to_mask([0, 1])))
        self.assertTrue(cycle_graph(4).is_independent(to_mask([0, 2])))

    def test_leaves(self):
        """Test leaf listing."""
        self.assertEqual(star_graph(3).leaves(), [1, 2, 3])
        self.assertEqual(path_graph(2).leaves(), [0, 1])


class TestDerivedGraphs(unittest.TestCase):
    """Test derived constructions."""

    def test_induced_subgraph_relabels(self):
        """Test that induced subgraphs are relabelled and labels are returned."""
        h, labels = cycle_graph(5).induced_subgraph(to_mask([1, 2, 4]))
        self.assertEqual(labels, (1, 2, 4))
        self.assertEqual(h.edges(), [(0, 1)])

    def test_delete_and_add_edge(self):
        """Test edge deletion and insertion."""
        g = cycle_graph(4).delete_edge(0, 3)
        self.assertEqual(g, path_graph(4))
        self.assertEqual(g.add_edge(3, 0), cycle_graph(4))
        with self.assertRaises(PreconditionError):
            g.delete_edge(0, 3)

    def test_subdivide_edge(self):
        """Test that subdividing an edge of K3 gives C4."""
        g = complete_graph(3).subdivide_edge(0, 1)
        self.assertEqual(g.n, 4)
        self.assertEqual(g.m, 4)
        self.assertFalse(g.has_edge(0, 1))
        self.assertTrue(g.has_edge(0, 3) and g.has_edge(1, 3))

    def test_relabel(self):
        """Test vertex relabelling."""
        g = path_graph(3).relabel([2, 0, 1])
        self.assertEqual(g.edges(), [(0, 1), (0, 2)])

    def test_complement_of_c5(self):
        """Test that the complement of C5 is C5."""
        h = complement(cycle_graph(5))
        self.assertEqual(h.m, 5)
        self.assertTrue(nx.is_isomorphic(h.to_networkx(), nx.cycle_graph(5)))

    def test_line_graph_of_star(self):
        """Test that the line graph of K_{1,3} is K3."""
        lg, edges = line_graph(star_graph(3))
        self.assertEqual(edges, ((0, 1), (0, 2), (0, 3)))
        self.assertEqual(lg, complete_graph(3))

    def test_line_graph_matches_networkx(self):
        """Test the line graph against networkx."""
        g = petersen_graph()
        lg, _ = line_graph(g)
        self.assertTrue(nx.is_isomorphic(lg.to_networkx(), nx.line_graph(g.to_networkx())))

    def test_triangle_augment(self):
        """Test the triangle augmentation of K4."""
        aug, edge_vertices = triangle_augment(complete_graph(4))
        self.assertEqual(aug.n, 10)
        self.assertEqual(aug.m, 18)
        self.assertEqual(to_list(edge_vertices), list(range(4, 10)))
        # vertex 4 is the edge-vertex of (0, 1)
        self.assertEqual(to_list(aug.adj[4]), [0, 1])

    def test_disjoint_union_and_vertex_sum(self):
        """Test gluing two triangles into a bowtie."""
        self.assertEqual(disjoint_union(complete_graph(3), complete_graph(3)).m, 6)
        bowtie = vertex_sum(complete_graph(3), 0, complete_graph(3), 0)
        self.assertEqual(bowtie.n, 5)
        self.assertEqual(bowtie.m, 6)
        self.assertEqual(bowtie.degree(0), 4)


class TestNamedGraphs(unittest.TestCase):
    """Test the named graph constructors."""

    def test_sizes(self):
        """Test orders and sizes of named graphs."""
        self.assertEqual((path_graph(5).n, path_graph(5).m), (5, 4))
        self.assertEqual((cycle_graph(6).n, cycle_graph(6).m), (6, 6))
        self.assertEqual(complete_graph(5).m, 10)
        self.assertEqual(complete_bipartite_graph(2, 3).m, 6)
        self.assertEqual(star_graph(4).degree(0), 4)
        self.assertEqual(petersen_graph().degrees(), [3] * 10)

    def test_short_cycle_rejected(self):
        """Test that cycles need three vertices."""
        with self.assertRaises(PreconditionError):
            cycle_graph(2)


if __name__ == "__main__":
    unittest.main()
