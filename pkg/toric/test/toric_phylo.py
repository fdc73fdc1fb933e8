r"""*Group-based flow and move tests for* ``toric`` *test suite*.

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


class TestGroups(ut.TestCase, SuperToric):
    """Finite abelian groups."""

    def test_parse(self):
        """Confirm preset names parse to their invariant factors."""
        from toric import FiniteAbelianGroup

        for text, factors, order in (
            ("Z2", (2,), 2),
            ("Z3", (3,), 3),
            ("Z2xZ2", (2, 2), 4),
            ("Z4", (4,), 4),
        ):
            G = FiniteAbelianGroup.parse(text)
            with self.subTest(text):
                self.assertEqual(G.factors, factors)
                self.assertEqual(G.order, order)
                self.assertEqual(str(G), text)
                self.assertEqual(len(G.elements()), order)

    def test_arithmetic(self):
        """Confirm reduction, sums and negation."""
        from toric import FiniteAbelianGroup

        G = FiniteAbelianGroup("Z2xZ2")
        self.assertEqual(G.element((3, 1)), (1, 1))
        self.assertEqual(G.add((1, 0), (1, 1)), (0, 1))
        self.assertEqual(G.total([(1, 0), (0, 1), (1, 1)]), G.zero)
        Z4 = FiniteAbelianGroup([4])
        self.assertEqual(Z4.neg(Z4.element(1)), (3,))
        self.assertEqual(Z4.format((3,)), 3)

    def test_bad_groups(self):
        """Confirm trivial factors and foreign elements are rejected."""
        from toric import FiniteAbelianGroup

        self.assertRaises(ValueError, FiniteAbelianGroup, [1])
        G = FiniteAbelianGroup("Z2xZ2")
        self.assertRaises(ValueError, G.element, 1)


class TestFlows(ut.TestCase, SuperToric):
    """Flows and the polytope of a group-based model."""

    def test_flow_counts(self):
        """Confirm there are ``|G|^(n−1)`` flows of length n."""
        from toric.phylo import GROUPS, flows

        for name in ("Z2", "Z3", "Z2xZ2"):
            G = GROUPS[name]
            for n in (1, 2, 3, 4):
                found = flows(G, n)
                with self.subTest(name, n=n):
                    self.assertEqual(len(found), G.order ** (n - 1))
                    self.assertEqual(found, sorted(found))

    def test_flows_sum_to_zero(self):
        """Confirm every flow sums to the identity."""
        from toric.phylo import GROUPS, flows, is_flow

        G = GROUPS["Z2xZ2"]
        for f in flows(G, 3):
            with self.subTest(f=f):
                self.assertTrue(is_flow(G, f))
                self.assertEqual(G.total(f), G.zero)

    def test_flow_limits(self):
        """Confirm empty flows and oversized enumerations are refused."""
        from toric.errors import TooLarge
        from toric.phylo import GROUPS, flows

        self.assertRaises(ValueError, flows, GROUPS["Z2"], 0)
        self.assertRaises(TooLarge, flows, GROUPS["Z2xZ2"], 8)

    def test_polytope_vertices(self):
        """Confirm the four vertices for ``ℤ₂`` on three leaves."""
        from toric.phylo import GROUPS, polytope_PGn

        S = polytope_PGn(GROUPS["Z2"], 3)
        self.assertEqual(
            S.points,
            (
                (1, 0, 1, 0, 1, 0),
                (1, 0, 0, 1, 0, 1),
                (0, 1, 1, 0, 0, 1),
                (0, 1, 0, 1, 1, 0),
            ),
        )

    def test_three_leaf_ideal_is_zero(self):
        """Confirm independent vertices give the zero ideal."""
        from toric.phylo import GROUPS, phylo_toric_ideal

        I = phylo_toric_ideal(GROUPS["Z2"], 3)
        self.assertTrue(I.is_zero())
        self.assertEqual(I.names, ("q0", "q1", "q2", "q3"))

    def test_four_leaf_ideal_is_binomial(self):
        """Confirm ``ℤ₂`` on four leaves gives homogeneous binomials."""
        from toric.phylo import GROUPS, phylo_toric_ideal

        I = phylo_toric_ideal(GROUPS["Z2"], 4)
        self.assertFalse(I.is_zero())
        for g in I.generators:
            with self.subTest(g=str(g)):
                self.assertTrue(g.is_binomial())
                self.assertTrue(g.is_homogeneous())


class TestTables(ut.TestCase, SuperToric):
    """Tables of flows and compatibility."""

    def test_fixture_tables(self):
        """Confirm the bundled tables are compatible, sharing no row."""
        from toric.phylo import GROUPS, FlowTable, compatible

        G = GROUPS["Z2"]
        T0 = FlowTable(G, self.get_fixture("rel_t0.json"))
        T1 = FlowTable(G, self.get_fixture("rel_t1.json"))
        self.assertEqual((T0.degree, T0.n), (3, 6))
        self.assertTrue(compatible(T0, T1))
        self.assertEqual(T0.phi_image(), T1.phi_image())
        self.assertFalse(set(T0.rows) & set(T1.rows))

    def test_incompatible_tables(self):
        """Confirm different columns, and different shapes, are detected."""
        from toric.errors import ShapeMismatch
        from toric.phylo import GROUPS, FlowTable, compatible

        G = GROUPS["Z2"]
        T0 = FlowTable(G, self.get_fixture("rel_t0.json"))
        zeros = FlowTable(G, [[0] * 6] * 3)
        self.assertFalse(compatible(T0, zeros))
        self.assertRaises(
            ShapeMismatch, compatible, T0, FlowTable(G, [[0] * 6] * 2)
        )

    def test_rows_must_be_flows(self):
        """Confirm a row not summing to zero is rejected."""
        from toric.phylo import GROUPS, FlowTable

        self.assertRaises(
            ValueError, FlowTable, GROUPS["Z2"], [[1, 0, 0]]
        )

    def test_rows_sorted(self):
        """Confirm row order does not matter."""
        from toric.phylo import GROUPS, FlowTable

        G = GROUPS["Z2"]
        self.assertEqual(
            FlowTable(G, [[1, 1, 0], [0, 0, 0]]),
            FlowTable(G, [[0, 0, 0], [1, 1, 0]]),
        )


class TestMoves(ut.TestCase, SuperToric):
    """Moves between compatible tables and phylogenetic complexity."""

    def test_connect_fixture_tables(self):
        """Confirm two quadratic moves join the bundled tables."""
        from toric.phylo import GROUPS, FlowTable, compatible, move_generate

        G = GROUPS["Z2"]
        T0 = FlowTable(G, self.get_fixture("rel_t0.json"))
        T1 = FlowTable(G, self.get_fixture("rel_t1.json"))
        path = move_generate(T0, T1, 2)
        self.assertEqual(len(path), 3)
        self.assertEqual(path[0], T0)
        self.assertEqual(path[-1], T1)
        for T in path:
            with self.subTest(rows=T.rows):
                self.assertTrue(compatible(T0, T))

    def test_identical_tables(self):
        """Confirm a table connects to itself with no moves."""
        from toric.phylo import GROUPS, FlowTable, move_generate

        T = FlowTable(GROUPS["Z2"], self.get_fixture("rel_t0.json"))
        self.assertEqual(move_generate(T, T, 2), [T])

    def test_incompatible_refused(self):
        """Confirm tables with different columns cannot be connected."""
        from toric.errors import ShapeMismatch
        from toric.phylo import GROUPS, FlowTable, move_generate

        G = GROUPS["Z2"]
        T0 = FlowTable(G, self.get_fixture("rel_t0.json"))
        zeros = FlowTable(G, [[0] * 6] * 3)
        self.assertRaises(ShapeMismatch, move_generate, T0, zeros, 2)

    def test_move_budget(self):
        """Confirm the search stops at its node budget."""
        from toric.errors import BudgetExceeded
        from toric.phylo import GROUPS, FlowTable, move_generate

        G = GROUPS["Z2"]
        T0 = FlowTable(G, self.get_fixture("rel_t0.json"))
        T1 = FlowTable(G, self.get_fixture("rel_t1.json"))
        self.assertRaises(BudgetExceeded, move_generate, T0, T1, 2, 1)

    def test_complexity(self):
        """Confirm move sizes for ``ℤ₂`` on three, four and five leaves."""
        from toric.phylo import GROUPS, complexity_estimate

        for n, expected in ((3, 0), (4, 2), (5, 2)):
            report = complexity_estimate(GROUPS["Z2"], n, 3)
            with self.subTest(n=n):
                self.assertEqual(report.phi_hat, expected)
                self.assertEqual(report.to_json()["degree_max"], 3)

    def test_complexity_z3(self):
        """Confirm ``ℤ₃`` on three leaves needs moves of at most three rows."""
        from toric.phylo import GROUPS, complexity_estimate

        report = complexity_estimate(GROUPS["Z3"], 3, 3)
        self.assertLessEqual(report.phi_hat, 3)

    def test_ideal_degree_matches_moves(self):
        """Confirm generator degrees equal the largest move size."""
        from toric.phylo import GROUPS, degree_cross_check

        for n, expected in ((3, 0), (4, 2)):
            check = degree_cross_check(GROUPS["Z2"], n, 3)
            with self.subTest(n=n):
                self.assertEqual(check.ideal_degree, expected)
                self.assertTrue(check.agree)


def suite_phylo():
    """Create and return the test suite for group-based models."""
    s = ut.TestSuite()
    tl = ut.TestLoader()
    s.addTests(
        [
            tl.loadTestsFromTestCase(TestGroups),
            tl.loadTestsFromTestCase(TestFlows),
            tl.loadTestsFromTestCase(TestTables),
            tl.loadTestsFromTestCase(TestMoves),
        ]
    )

    return s


if __name__ == "__main__":
    print("Module not executable.")
