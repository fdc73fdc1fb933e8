r"""*Cut polytope and four-coloring tests for* ``toric`` *test suite*.

``toric`` Toric Objects: Rings, Ideals and Cones.

**Author**
    toric contributors

**File Created**
    18 Oct 2026

**Copyright**
    \(c) toric contributors 2026

**License**
    The MIT License; see |license_txt|_ for full license terms

**Members**

*(none documented)*

"""

import unittest as ut

from .toric_base import SuperToric


class TestCutVectors(ut.TestCase, SuperToric):
    """Graphs, partitions and cut vectors."""

    def test_k4_fixture(self):
        """Confirm the bundled K4 is the complete graph."""
        from toric import Graph
        from toric.cuts import complete_graph

        G = Graph.from_json(self.get_fixture("k4.json"))
        self.assertEqual(G, complete_graph(4))

    def test_cut_counts(self):
        """Confirm ``2^(n−1)`` distinct cut vectors of connected graphs."""
        from toric.cuts import (
            complete_graph,
            cut_polytope_points,
            cycle_graph,
            path_graph,
        )

        for G in (complete_graph(4), cycle_graph(5), path_graph(3)):
            S = cut_polytope_points(G)
            with self.subTest(G=str(G)):
                self.assertEqual(len(S), 2 ** (G.n - 1))
                self.assertEqual(len(set(S.points)), len(S))

    def test_cut_vector(self):
        """Confirm the cut of ``{0, 1}|{2, 3}`` in K4."""
        from toric.cuts import complete_graph, cut_vector

        G = complete_graph(4)
        self.assertEqual(
            cut_vector(G, {0, 1}, {2, 3}), (1, 0, 1, 1, 1, 1, 0)
        )

    def test_invalid_partition(self):
        """Confirm overlapping or incomplete parts are rejected."""
        from toric.cuts import complete_graph, cut_vector
        from toric.errors import InvalidPartition

        G = complete_graph(3)
        for A, B in (({0, 1}, {1, 2}), ({0}, {1})):
            with self.subTest(A=A, B=B):
                self.assertRaises(InvalidPartition, cut_vector, G, A, B)

    def test_disconnected_refused(self):
        """Confirm a disconnected graph raises Disconnected."""
        from toric import Graph
        from toric.cuts import cut_polytope_points
        from toric.errors import Disconnected

        G = Graph(3, [(0, 1)])
        self.assertFalse(G.is_connected())
        self.assertRaises(Disconnected, cut_polytope_points, G)

    def test_size_limit(self):
        """Confirm enumeration refuses too many vertices."""
        from toric.cuts import complete_graph, cut_polytope_points
        from toric.errors import TooLarge

        self.assertRaises(TooLarge, cut_polytope_points, complete_graph(11))

    def test_bad_edges(self):
        """Confirm loops and repeated edges are rejected."""
        from toric import Graph

        for edges in ([(0, 0)], [(0, 1), (1, 0)], [(0, 3)]):
            with self.subTest(edges=edges):
                self.assertRaises(ValueError, Graph, 3, edges)


class TestSeymour(ut.TestCase, SuperToric):
    """Facet inequalities of cut cones."""

    def test_cuts_satisfy_inequalities(self):
        """Confirm every cut vector satisfies every inequality."""
        from toric.cuts import (
            complete_graph,
            cut_polytope_points,
            cycle_graph,
            path_graph,
            seymour_inequalities,
        )
        from toric.utils import dot

        for G in (complete_graph(4), cycle_graph(5), path_graph(4)):
            ineqs = seymour_inequalities(G)
            for x in cut_polytope_points(G).points:
                with self.subTest(G=str(G), x=x):
                    self.assertTrue(all(dot(c, x) >= 0 for c in ineqs))

    def test_triangle_inequalities(self):
        """Confirm the triangle has only its four cycle inequalities."""
        from toric.cuts import cycle_graph, seymour_inequalities

        self.assertEqual(len(seymour_inequalities(cycle_graph(3))), 4)

    def test_path_edge_bounds(self):
        """Confirm a path has only edge bounds."""
        from toric.cuts import path_graph, seymour_inequalities

        ineqs = seymour_inequalities(path_graph(3))
        self.assertEqual(
            set(ineqs),
            {(0, 1, 0), (1, -1, 0), (0, 0, 1), (1, 0, -1)},
        )


class TestColorings(ut.TestCase, SuperToric):
    """Decompositions of ``(3, 2, …, 2)`` and four-colorings."""

    def test_four_colorings(self):
        """Confirm colorings read off decompositions are proper."""
        from toric.cuts import (
            complete_graph,
            cycle_graph,
            four_coloring,
            path_graph,
        )

        for G in (complete_graph(4), cycle_graph(5), path_graph(4)):
            coloring = four_coloring(G)
            with self.subTest(G=str(G)):
                self.assertEqual(set(coloring), set(range(G.n)))
                self.assertTrue(set(coloring.values()) <= {1, 2, 3, 4})
                self.assertProperColoring(G, coloring)

    def test_k4_uses_four_colors(self):
        """Confirm K4 needs all four colors."""
        from toric.cuts import complete_graph, four_coloring

        coloring = four_coloring(complete_graph(4))
        self.assertEqual(sorted(coloring.values()), [1, 2, 3, 4])

    def test_decomposition_sums(self):
        """Confirm the three cut vectors sum to the target point."""
        from toric.cuts import (
            complete_graph,
            cut_vector,
            decompose_targets,
            target_point,
        )

        G = complete_graph(4)
        parts = decompose_targets(G)
        total = [0] * (len(G.edges) + 1)
        for A, B in parts:
            total = [t + x for t, x in zip(total, cut_vector(G, A, B))]
        self.assertEqual(tuple(total), target_point(G))

    def test_k5_has_no_decomposition(self):
        """Confirm K5 admits no decomposition and no four-coloring."""
        from toric.cuts import complete_graph, decompose_targets, four_coloring
        from toric.errors import NoDecomposition

        G = complete_graph(5)
        self.assertIsNone(decompose_targets(G))
        self.assertRaises(NoDecomposition, four_coloring, G)

    def test_lattice_certificate(self):
        """Confirm the certificate reproduces the target point."""
        from toric.cuts import (
            complete_graph,
            cut_lattice_certificate,
            cut_polytope_points,
            target_point,
        )

        G = complete_graph(4)
        coeffs = cut_lattice_certificate(G)
        points = cut_polytope_points(G).points
        total = tuple(
            sum(c * p[i] for c, p in zip(coeffs, points))
            for i in range(len(G.edges) + 1)
        )
        self.assertEqual(total, target_point(G))


class TestCutIdeals(ut.TestCase, SuperToric):
    """Cut toric ideals and normality."""

    def test_complete_graph_ideal(self):
        """Confirm K4 gives one homogeneous generator."""
        from toric.cuts import complete_graph, cut_toric_ideal

        I = cut_toric_ideal(complete_graph(4))
        self.assertEqual(len(I.generators), 1)
        for g in I.generators:
            with self.subTest(g=str(g)):
                self.assertTrue(g.is_homogeneous())

    def test_path_ideal(self):
        """Confirm the path on three vertices gives one quadric."""
        from toric.cuts import cut_toric_ideal, path_graph

        self.assertSameIdeal(
            cut_toric_ideal(path_graph(3)), ["q0*q1 - q2*q3"]
        )

    def test_paths_are_normal(self):
        """Confirm cut configurations of paths are saturated."""
        from toric.cuts import normality_evidence, path_graph

        for n in (3, 4):
            with self.subTest(n=n):
                self.assertTrue(normality_evidence(path_graph(n)).saturated)


def suite_cuts():
    """Create and return the test suite for cut polytopes."""
    s = ut.TestSuite()
    tl = ut.TestLoader()
    s.addTests(
        [
            tl.loadTestsFromTestCase(TestCutVectors),
            tl.loadTestsFromTestCase(TestSeymour),
            tl.loadTestsFromTestCase(TestColorings),
            tl.loadTestsFromTestCase(TestCutIdeals),
        ]
    )

    return s


if __name__ == "__main__":
    print("Module not executable.")
