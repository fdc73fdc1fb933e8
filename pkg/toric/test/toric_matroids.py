r"""*Matroid, base polytope and exchange ideal tests for* ``toric``.

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


#: The 4-cycle 0-1-2-3 with the diagonal 0-2 as the last edge
SQUARE_DIAGONAL = {
    "n": 4,
    "edges": [[0, 1], [1, 2], [2, 3], [0, 3], [0, 2]],
}


class TestMatroids(ut.TestCase, SuperToric):
    """Construction and validation of matroids."""

    def test_uniform_fixture(self):
        """Confirm the bundled U(2,4) has six bases in lex order."""
        from toric import Matroid

        M = Matroid.from_json(self.get_fixture("u24.json"))
        self.assertEqual(M.rank, 2)
        self.assertEqual(len(M.bases), self.binomial(4, 2))
        self.assertEqual(M.bases[0], (0, 1))
        self.assertEqual(M.names()[-1], "a6")

    def test_graphic_fixture(self):
        """Confirm the bundled bases are the spanning trees."""
        from toric import Graph, Matroid
        from toric.matroids import graphic_matroid

        M = Matroid.from_json(self.get_fixture("square_diagonal.json"))
        G = graphic_matroid(Graph.from_json(SQUARE_DIAGONAL))
        self.assertEqual(set(M.bases), set(G.bases))
        self.assertNotIn((0, 1, 4), M.bases)

    def test_spanning_tree_counts(self):
        """Confirm Cayley's count for K4 and the 4-cycle."""
        from toric.cuts import complete_graph, cycle_graph
        from toric.matroids import graphic_matroid, spanning_tree_count

        for G, count in ((complete_graph(4), 16), (cycle_graph(4), 4)):
            with self.subTest(G=str(G)):
                self.assertEqual(spanning_tree_count(G), count)
                self.assertEqual(len(graphic_matroid(G).bases), count)

    def test_invalid_families(self):
        """Confirm families breaking the axioms are rejected."""
        from toric.matroids import is_valid

        for bases in (
            [(0, 1), (2, 3)],
            [(0, 1), (0,)],
            [(0, 1), (0, 1)],
            [(0, 5)],
            [],
        ):
            with self.subTest(bases=bases):
                self.assertFalse(is_valid(4, bases))
        self.assertTrue(is_valid(4, [(0, 1), (0, 2), (1, 2)]))

    def test_bad_uniform(self):
        """Confirm ``U(3, 2)`` does not exist."""
        from toric.errors import InvalidMatroid
        from toric.matroids import uniform_matroid

        self.assertRaises(InvalidMatroid, uniform_matroid, 3, 2)


class TestExchanges(ut.TestCase, SuperToric):
    """Symmetric exchanges and fiber connectivity."""

    def test_exchange_moves(self):
        """Confirm ``{01, 23}`` moves to the other two perfect matchings."""
        from toric.matroids import (
            BasisMultiset,
            symmetric_exchange_moves,
            uniform_matroid,
        )

        M = uniform_matroid(2, 4)
        moves = symmetric_exchange_moves(M, BasisMultiset([(0, 1), (2, 3)]))
        self.assertEqual(
            [m.bases for m in moves],
            [((0, 2), (1, 3)), ((0, 3), (1, 2))],
        )
        for m in moves:
            with self.subTest(m=m.bases):
                self.assertEqual(m.union(4), (1, 1, 1, 1))

    def test_white_small_degrees(self):
        """Confirm fibers of degree 2 and 3 are connected."""
        from toric import Matroid
        from toric.matroids import white_check

        for fname, d in (
            ("u24.json", 2),
            ("u24.json", 3),
            ("square_diagonal.json", 2),
        ):
            M = Matroid.from_json(self.get_fixture(fname))
            report = white_check(M, d)
            with self.subTest(fname, d=d):
                self.assertTrue(report.all_connected)
                self.assertIsNone(report.witness)

    def test_white_budget(self):
        """Confirm the fiber search stops at its node budget."""
        from toric.errors import BudgetExceeded
        from toric.matroids import uniform_matroid, white_check

        self.assertRaises(
            BudgetExceeded, white_check, uniform_matroid(2, 4), 2, 3
        )


class TestBasePolytopes(ut.TestCase, SuperToric):
    """Base polytopes, their normality and toric ideals."""

    def test_hypersimplex_normal(self):
        """Confirm the base polytope of U(2,4) is normal with six vertices."""
        from toric.matroids import matroid_base_polytope, uniform_matroid

        report = matroid_base_polytope(uniform_matroid(2, 4))
        self.assertEqual(len(report.polytope.vertices), 6)
        self.assertTrue(report.normal)

    def test_integer_caratheodory(self):
        """Confirm the second dilate of U(2,4) is covered."""
        from toric.errors import TooLarge
        from toric.matroids import icp_check, uniform_matroid

        M = uniform_matroid(2, 4)
        self.assertTrue(icp_check(M, 2))
        self.assertRaises(TooLarge, icp_check, M, 4)

    def test_toric_ideal_of_hypersimplex(self):
        """Confirm two quadrics generate the ideal of U(2,4)."""
        from toric.matroids import matroid_toric_ideal, uniform_matroid

        report = matroid_toric_ideal(uniform_matroid(2, 4))
        self.assertSameIdeal(report.ideal, ["a1*a6 - a2*a5", "a2*a5 - a3*a4"])
        self.assertEqual(report.max_degree, 2)
        self.assertTrue(report.within_bound)


class TestFedder(ut.TestCase, SuperToric):
    """Exchange ideals and Fedder's criterion over 𝔽₂."""

    def test_exchange_ideal(self):
        """Confirm the exchange binomials of U(2,4)."""
        from toric.matroids import exchange_ideal, uniform_matroid

        J = exchange_ideal(uniform_matroid(2, 4))
        self.assertEqual(len(J.generators), 3)
        self.assertSameIdeal(J, ["a1*a6 + a3*a4", "a1*a6 + a2*a5"])

    def test_fixture_witnesses(self):
        """Confirm F-purity and the bundled witnesses."""
        from toric import Matroid
        from toric.matroids import fedder_check

        for fname, f in (
            ("u24.json", "a2*a3*a4*a5 + a1*a3*a4*a6 + a1*a2*a5*a6"),
            (
                "square_diagonal.json",
                "a1*a4*a5*a6*a7 + a2*a3*a5*a6*a8"
                " + a2*a4*a5*a7*a8 + a1*a3*a6*a7*a8",
            ),
        ):
            M = Matroid.from_json(self.get_fixture(fname))
            report = fedder_check(M, f)
            with self.subTest(fname):
                self.assertTrue(report.is_f_pure)
                self.assertIsNotNone(report.witness)
                self.assertTrue(report.contains_f)

    def test_unit_not_in_colon(self):
        """Confirm 1 is never in the colon modulo squares."""
        from toric.matroids import fedder_check, uniform_matroid

        report = fedder_check(uniform_matroid(2, 4), "1")
        self.assertFalse(report.contains_f)


def suite_matroids():
    """Create and return the test suite for matroids."""
    s = ut.TestSuite()
    tl = ut.TestLoader()
    s.addTests(
        [
            tl.loadTestsFromTestCase(TestMatroids),
            tl.loadTestsFromTestCase(TestExchanges),
            tl.loadTestsFromTestCase(TestBasePolytopes),
            tl.loadTestsFromTestCase(TestFedder),
        ]
    )

    return s


if __name__ == "__main__":
    print("Module not executable.")
