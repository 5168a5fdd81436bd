"""Tests for integer matrices and the incidence Gram certificate"""

import unittest

from treecover_lab.certificates import (
    IntegerMatrix,
    gram_index_to_augmented,
    incidence_gram,
    incidence_matrix,
    integer_rank,
)
from treecover_lab.enumeration import enumerate_connected_upto
from treecover_lab.errors import GraphParseError, PreconditionError
from treecover_lab.graph import Graph, complete_graph, cycle_graph, path_graph, petersen_graph

from tests.oracles import sympy_rank


class TestIntegerMatrix(unittest.TestCase):
    """Test the matrix value type."""

    def test_shape_checked(self):
        """Test that the entry count must match the shape."""
        with self.assertRaises(PreconditionError):
            IntegerMatrix(2, 2, (1, 2, 3))
        with self.assertRaises(PreconditionError):
            IntegerMatrix.from_rows([[1, 2], [3]])

    def test_matmul_and_transpose(self):
        """Test a small product."""
        a = IntegerMatrix.from_rows([[1, 2, 0], [0, 1, -1]])
        product = a.matmul(a.transpose())
        self.assertEqual(product.to_rows(), [[5, 2], [2, 2]])
        self.assertTrue(product.is_symmetric())
        self.assertFalse(a.is_symmetric())
        with self.assertRaises(PreconditionError):
            a.matmul(a)

    def test_text_round_trip(self):
        """Test that text output parses back to the same matrix."""
        a = IntegerMatrix.from_rows([[1, -2], [0, 7], [3, 3]])
        self.assertEqual(a.to_text(), "3 2\n1 -2\n0 7\n3 3\n")
        self.assertEqual(IntegerMatrix.from_text(a.to_text()), a)

    def test_text_errors(self):
        """Test that malformed text reports the offending line."""
        with self.assertRaises(GraphParseError) as ctx:
            IntegerMatrix.from_text("2 two\n")
        self.assertEqual(ctx.exception.line, 1)
        with self.assertRaises(GraphParseError) as ctx:
            IntegerMatrix.from_text("2 2\n1 0\n0\n")
        self.assertEqual(ctx.exception.line, 3)
        with self.assertRaises(GraphParseError) as ctx:
            IntegerMatrix.from_text("2 2\n1 x\n0 1\n")
        self.assertEqual(ctx.exception.line, 2)
        with self.assertRaises(GraphParseError):
            IntegerMatrix.from_text("3 2\n1 0\n0 1\n")


class TestIntegerRank(unittest.TestCase):
    """Test fraction-free rank."""

    def test_known_ranks(self):
        """Test identity, all-ones and zero matrices."""
        self.assertEqual(integer_rank(IntegerMatrix.identity(3)), 3)
        self.assertEqual(integer_rank(IntegerMatrix.from_rows([[1] * 4] * 3)), 1)
        self.assertEqual(integer_rank(IntegerMatrix.from_rows([[0, 0], [0, 0]])), 0)
        self.assertEqual(integer_rank(IntegerMatrix(0, 0, ())), 0)

    def test_incidence_ranks(self):
        """Test that incidence rank is n - 1 for bipartite and n otherwise."""
        self.assertEqual(integer_rank(incidence_matrix(cycle_graph(4))), 3)
        self.assertEqual(integer_rank(incidence_matrix(complete_graph(3))), 3)
        self.assertEqual(integer_rank(incidence_matrix(path_graph(5))), 4)

    def test_matches_sympy(self):
        """Test against sympy on incidence and Gram matrices."""
        graphs = [petersen_graph(), complete_graph(5), cycle_graph(7), path_graph(6)]
        for g in graphs:
            b = incidence_matrix(g)
            self.assertEqual(integer_rank(b), sympy_rank(b))
            self.assertEqual(integer_rank(b.matmul(b.transpose())), sympy_rank(b))

    def test_zero_column_skipped(self):
        """Test a matrix whose first column is zero."""
        a = IntegerMatrix.from_rows([[0, 2, 4], [0, 1, 2], [0, 3, 1]])
        self.assertEqual(integer_rank(a), 2)


class TestIncidenceGram(unittest.TestCase):
    """Test the triangle-augmentation certificate."""

    def test_triangle(self):
        """Test the 6 x 6 Gram matrix of K3."""
        gram, checks = incidence_gram(complete_graph(3))
        self.assertEqual((gram.rows, gram.cols), (6, 6))
        self.assertEqual(checks.rank, 3)
        self.assertTrue(checks.passed)
        self.assertEqual(checks.nullity_lower_bound, 3)
        # vertex rows carry the degree on the diagonal
        self.assertEqual([gram.at(i, i) for i in range(6)], [1, 1, 1, 2, 2, 2])

    def test_small_cases(self):
        """Test K4 and a single edge."""
        gram, checks = incidence_gram(complete_graph(4))
        self.assertEqual((gram.rows, checks.rank), (10, 6))
        self.assertTrue(checks.passed)
        gram, checks = incidence_gram(path_graph(2))
        self.assertEqual((gram.rows, checks.rank), (3, 1))
        self.assertTrue(checks.passed)

    def test_index_map(self):
        """Test that edge rows come first."""
        self.assertEqual(gram_index_to_augmented(path_graph(3)), [3, 4, 0, 1, 2])

    def test_preconditions(self):
        """Test empty and disconnected input."""
        with self.assertRaises(PreconditionError):
            incidence_gram(Graph.empty(0))
        with self.assertRaises(PreconditionError):
            incidence_gram(Graph.from_edges(4, [(0, 1), (2, 3)]))

    def test_all_small_graphs_pass(self):
        """Test every connected graph with 2 to 6 vertices."""
        for g in enumerate_connected_upto(6, n_min=2):
            _, checks = incidence_gram(g)
            self.assertTrue(checks.passed, (g, checks.to_dict()))
            self.assertEqual(checks.rank, g.m)

    def test_to_dict(self):
        """Test the serialized checks."""
        _, checks = incidence_gram(cycle_graph(4))
        data = checks.to_dict()
        self.assertEqual(data["m"], 4)
        self.assertEqual(data["rank"], 4)
        self.assertTrue(data["passed"])


if __name__ == "__main__":
    unittest.main()
