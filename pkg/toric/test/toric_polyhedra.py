r"""*Cone, polytope and normality tests for* ``toric`` *test suite*.

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

from fractions import Fraction
import unittest as ut

from .toric_base import SuperToric


class TestCones(ut.TestCase, SuperToric):
    """Facets, rays, duals and Hilbert bases of cones."""

    def test_hilbert_basis(self):
        """Confirm the Hilbert basis of cone((1,0),(1,2))."""
        from toric import Cone, hilbert_basis

        C = Cone(2, [(1, 0), (1, 2)])
        self.assertEqual(hilbert_basis(C), [(1, 0), (1, 1), (1, 2)])

    def test_hilbert_basis_smooth_cone(self):
        """Confirm a unimodular cone is its own Hilbert basis."""
        from toric import Cone, hilbert_basis

        C = Cone(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
        self.assertEqual(
            hilbert_basis(C), [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
        )

    def test_hilbert_basis_covers_zonotope(self):
        """Confirm every zonotope point is a sum of Hilbert basis elements."""
        import itertools as itt

        from toric import Cone, hilbert_basis
        from toric.lattice import solve_rational

        rays = [(1, 0, 0), (0, 1, 0), (1, 1, 3)]
        basis = hilbert_basis(Cone(3, rays))
        bound = tuple(sum(r[i] for r in rays) for i in range(3))

        # All entries are nonnegative, so sums stay inside the bound box
        sums = {(0, 0, 0)}
        frontier = list(sums)
        while frontier:
            x = frontier.pop()
            for h in basis:
                y = tuple(a + b for a, b in zip(x, h))
                if y not in sums and all(a <= b for a, b in zip(y, bound)):
                    sums.add(y)
                    frontier.append(y)

        columns = [[r[i] for r in rays] for i in range(3)]
        for x in itt.product(*(range(b + 1) for b in bound)):
            lam = solve_rational(columns, x)
            if all(0 <= c <= 1 for c in lam):
                with self.subTest(x=x):
                    self.assertIn(x, sums)

    def test_redundant_generator_dropped(self):
        """Confirm only extreme rays are reported."""
        from toric import Cone

        C = Cone(2, [(1, 0), (0, 1), (1, 1)])
        self.assertEqual(set(C.rays), {(1, 0), (0, 1)})

    def test_generators_made_primitive(self):
        """Confirm generators are stored primitive."""
        from toric import Cone

        self.assertEqual(Cone(2, [(2, 4)]).generators, ((1, 2),))

    def test_dual(self):
        """Confirm the dual of cone((1,0),(1,2))."""
        from toric import Cone

        C = Cone(2, [(1, 0), (1, 2)])
        self.assertEqual(set(C.dual().rays), {(0, 1), (2, -1)})
        self.assertEqual(set(C.facets), {(0, 1), (2, -1)})

    def test_dual_cone_is_involution(self):
        """Confirm the dual of the dual is the original cone."""
        from toric import Cone
        from toric.polyhedra import dual_cone

        C = Cone(2, [(1, 0), (1, 2)])
        self.assertEqual(set(dual_cone(dual_cone(C)).rays), set(C.rays))

    def test_membership(self):
        """Confirm membership on both sides of a facet."""
        from toric.polyhedra import Cone, cone_membership

        C = Cone(2, [(1, 0), (1, 2)])
        self.assertTrue(cone_membership(C, (1, 1)))
        self.assertFalse(cone_membership(C, (0, 1)))

    def test_not_pointed(self):
        """Confirm a cone containing a line has no Hilbert basis."""
        from toric import Cone, hilbert_basis
        from toric.errors import NotPointed

        C = Cone(2, [(1, 0), (-1, 0), (0, 1)])
        self.assertFalse(C.is_pointed())
        self.assertRaises(NotPointed, hilbert_basis, C)

    def test_faces_of_quadrant(self):
        """Confirm the quadrant has four faces including itself."""
        from toric import Cone

        C = Cone(2, [(1, 0), (0, 1)])
        self.assertEqual(len(C.faces()), 4)


class TestPolytopes(ut.TestCase, SuperToric):
    """Polytopes, lattice points, smoothness and Ehrhart polynomials."""

    def test_from_points_hull(self):
        """Confirm interior and edge points are dropped."""
        from toric import Polytope

        P = Polytope.from_points([(0, 0), (2, 0), (0, 2), (1, 1), (1, 0)])
        self.assertEqual(set(P.vertices), {(0, 0), (2, 0), (0, 2)})

    def test_non_vertex_rejected(self):
        """Confirm a listed non-vertex raises InvalidPolytope."""
        from toric import Polytope
        from toric.errors import InvalidPolytope

        self.assertRaises(
            InvalidPolytope, Polytope, 2, [(0, 0), (2, 0), (0, 2), (1, 0)]
        )

    def test_lattice_point_counts(self):
        """Confirm counts of dilated simplices and squares."""
        from toric.polyhedra import lattice_points, unit_cube, unit_simplex

        for P, k, count in (
            (unit_simplex(2), 2, 6),
            (unit_cube(2), 2, 9),
            (unit_simplex(3), 1, 4),
        ):
            with self.subTest(P=P.vertices, k=k):
                self.assertEqual(len(lattice_points(P, k)), count)

    def test_ehrhart(self):
        """Confirm Ehrhart polynomials of the square and triangle."""
        from toric.polyhedra import ehrhart, unit_cube, unit_simplex

        self.assertEqual(ehrhart(unit_cube(2)).coefficients, (1, 2, 1))
        self.assertEqual(
            ehrhart(unit_simplex(2)).coefficients,
            (1, Fraction(3, 2), Fraction(1, 2)),
        )
        self.assertEqual(ehrhart(unit_simplex(2))(3), 10)

    def test_degree_is_normalized_volume(self):
        """Confirm degrees of segments, the square and simplices."""
        from toric.polyhedra import (
            degree_of_variety,
            segment,
            unit_cube,
            unit_simplex,
        )

        for d in range(1, 6):
            with self.subTest(segment=d):
                self.assertEqual(degree_of_variety(segment(d)), d)
        with self.subTest("square"):
            self.assertEqual(degree_of_variety(unit_cube(2)), 2)
        with self.subTest("simplex"):
            self.assertEqual(degree_of_variety(unit_simplex(3)), 1)

    def test_smoothness(self):
        """Confirm smooth and singular polygons."""
        from toric import Polytope
        from toric.polyhedra import is_smooth_polytope, unit_cube

        self.assertTrue(is_smooth_polytope(unit_cube(2)))
        self.assertFalse(
            is_smooth_polytope(Polytope(2, [(0, 0), (1, 0), (0, 2)]))
        )

    def test_normal_fan_of_square(self):
        """Confirm the square's normal fan is smooth and complete."""
        from toric.polyhedra import normal_fan, unit_cube

        fan = normal_fan(unit_cube(2))
        self.assertEqual(fan.nrays, 4)
        self.assertTrue(fan.is_smooth())
        self.assertTrue(fan.is_complete())


class TestNormality(ut.TestCase, SuperToric):
    """Saturation and normality fixtures."""

    def test_unit_polytopes_normal(self):
        """Confirm unit simplices and squares are normal."""
        from toric.polyhedra import is_normal_polytope, unit_cube, unit_simplex

        for P in (unit_simplex(2), unit_simplex(3), unit_cube(2)):
            with self.subTest(P=P.vertices):
                self.assertTrue(is_normal_polytope(P))

    def test_rational_quartic_not_normal(self):
        """Confirm {0, 1, 3, 4} is not projectively normal."""
        from toric.polyhedra import is_normal_configuration

        self.assertFalse(is_normal_configuration([(0,), (1,), (3,), (4,)]))

    def test_missing_hilbert_basis_element(self):
        """Confirm (2, 1) is reported missing for {0, 1, 3, 4} at height 1."""
        from toric import PointConfig
        from toric.polyhedra import saturation_report

        S = PointConfig(1, [(0,), (1,), (3,), (4,)]).homogenize()
        report = saturation_report(S)
        self.assertFalse(report.saturated)
        self.assertIn((2, 1), report.missing)

    def test_non_saturated_configuration(self):
        """Confirm the five-point configuration is not saturated."""
        from toric.polyhedra import monoid_is_saturated

        S = [(0, 0, 0), (0, 1, 0), (0, 0, 1), (3, 1, 1), (4, 1, 1)]
        self.assertFalse(monoid_is_saturated(S))

    def test_very_ample_not_normal(self):
        """Confirm the eight-vertex polytope is very ample, not normal."""
        from toric import Polytope
        from toric.polyhedra import is_normal_polytope, is_very_ample

        P = Polytope.from_json(self.get_fixture("very_ample_not_normal.json"))
        self.assertEqual(len(P.vertices), 8)
        self.assertTrue(is_very_ample(P))
        self.assertFalse(is_normal_polytope(P))

    def test_veronese_normal(self):
        """Confirm small Veronese configurations are normal."""
        from toric.polyhedra import is_normal_configuration, veronese_points

        for n, r in ((2, 2), (3, 2), (2, 3)):
            with self.subTest(n=n, r=r):
                self.assertTrue(is_normal_configuration(veronese_points(n, r)))

    def test_homogenize(self):
        """Confirm lifting to height one."""
        from toric import PointConfig

        S = PointConfig(1, [(2,), (3,)])
        self.assertEqual(S.homogenize().points, ((2, 1), (3, 1)))
        self.assertTrue(S.homogenize().is_homogeneous())


def suite_polyhedra():
    """Create and return the test suite for cones and polytopes."""
    s = ut.TestSuite()
    tl = ut.TestLoader()
    s.addTests(
        [
            tl.loadTestsFromTestCase(TestCones),
            tl.loadTestsFromTestCase(TestPolytopes),
            tl.loadTestsFromTestCase(TestNormality),
        ]
    )

    return s


if __name__ == "__main__":
    print("Module not executable.")
