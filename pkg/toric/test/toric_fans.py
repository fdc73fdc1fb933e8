r"""*Fan, divisor and positivity tests for* ``toric`` *test suite*.

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


class TestFans(ut.TestCase, SuperToric):
    """Fan construction, completeness and class groups."""

    def test_presets_complete_and_smooth(self):
        """Confirm the complete presets are smooth and complete."""
        from toric.fans import PRESETS

        for name in ("P1", "P2", "P3", "P1xP1", "F1", "F2", "F3"):
            fan = PRESETS[name]()
            with self.subTest(name):
                self.assertTrue(fan.is_complete())
                self.assertTrue(fan.is_smooth())
                self.assertTrue(fan.is_simplicial())

    def test_fixture_fans(self):
        """Confirm bundled fans load and match their presets."""
        from toric import Fan
        from toric.fans import hirzebruch_fan, projective_space_fan

        for fname, preset in (
            ("p2.json", projective_space_fan(2)),
            ("hirzebruch2.json", hirzebruch_fan(2)),
        ):
            fan = Fan.from_json(self.get_fixture(fname))
            with self.subTest(fname):
                self.assertTrue(fan.same_fan(preset))

    def test_quadric_cone_incomplete(self):
        """Confirm the single-cone fan is not complete."""
        from toric.errors import NotComplete
        from toric.fans import quadric_cone_fan

        fan = quadric_cone_fan()
        self.assertFalse(fan.is_complete())
        self.assertFalse(fan.is_smooth())
        self.assertRaises(NotComplete, fan.check_complete)

    def test_non_pointed_cone_rejected(self):
        """Confirm a cone containing a line raises NotPointed."""
        from toric import Fan
        from toric.errors import NotPointed

        self.assertRaises(NotPointed, Fan, 1, [(1,), (-1,)], [(0, 1)])

    def test_all_cones(self):
        """Confirm ℙ² has seven cones including the origin."""
        from toric.fans import projective_space_fan

        cones = projective_space_fan(2).all_cones()
        self.assertEqual(len(cones), 7)
        self.assertEqual(cones[0], ())

    def test_class_groups(self):
        """Confirm class groups of the presets."""
        from toric.fans import PRESETS, class_group

        for name, expected in (
            ("P1", (1, ())),
            ("P2", (1, ())),
            ("P3", (1, ())),
            ("P1xP1", (2, ())),
            ("F2", (2, ())),
            ("quadric", (0, (2,))),
        ):
            G = class_group(PRESETS[name]())
            with self.subTest(name):
                self.assertEqual((G.free_rank, tuple(G.torsion)), expected)

    def test_rays_must_span(self):
        """Confirm a fan in a hyperplane has no class group."""
        from toric import Fan
        from toric.errors import RaysDoNotSpan
        from toric.fans import class_group

        fan = Fan(2, [(1, 0)], [(0,)])
        self.assertRaises(RaysDoNotSpan, class_group, fan)


class TestOrbits(ut.TestCase, SuperToric):
    """Distinguished points and the orbit-face correspondence."""

    def test_distinguished_points(self):
        """Confirm 0/1 points of the faces of the quadrant."""
        from toric import Cone
        from toric.fans import orbit_distinguished_point

        C = Cone(2, [(1, 0), (0, 1)])
        self.assertEqual(orbit_distinguished_point(C, [0]), (1, 0))
        self.assertEqual(orbit_distinguished_point(C, []), (0, 0))
        self.assertEqual(
            orbit_distinguished_point(C, Cone(2, [(0, 1)])), (0, 1)
        )

    def test_non_face_rejected(self):
        """Confirm an interior generator is not a face."""
        from toric import Cone
        from toric.errors import NotAFace
        from toric.fans import orbit_distinguished_point

        C = Cone(2, [(1, 0), (1, 1), (0, 1)])
        self.assertRaises(NotAFace, orbit_distinguished_point, C, [1])

    def test_points_on_variety(self):
        """Confirm distinguished points of the conic cone satisfy xz = y²."""
        from toric import Cone
        from toric.fans import orbit_distinguished_point, point_on_variety

        C = Cone(2, [(1, 0), (1, 1), (1, 2)])
        for face in ([0], [2], [0, 1, 2]):
            p = orbit_distinguished_point(C, face)
            with self.subTest(face=face):
                self.assertTrue(point_on_variety(C, p))
        self.assertFalse(point_on_variety(C, (1, 0, 1)))

    def test_orbit_dimensions(self):
        """Confirm faces of the quadrant carry dimensions 0, 1, 1 and 2."""
        from toric import Cone
        from toric.fans import orbit_face_lattice

        C = Cone(2, [(1, 0), (0, 1)])
        dims = sorted(d for _, d in orbit_face_lattice(C))
        self.assertEqual(dims, [0, 1, 1, 2])


class TestDivisors(ut.TestCase, SuperToric):
    """Cartier data, divisor polytopes and positivity."""

    def test_cartier_data_on_p2(self):
        """Confirm the local characters of ``D₀`` on ℙ²."""
        from toric import WeilDivisor
        from toric.fans import cartier_data, projective_space_fan

        data = cartier_data(WeilDivisor(projective_space_fan(2), [1, 0, 0]))
        self.assertEqual(data.on((0, 1)), (-1, 0))
        self.assertEqual(data.on((0, 2)), (-1, 1))
        self.assertEqual(data.on((1, 2)), (0, 0))
        self.assertEqual(data.support_function((1, 0)), -1)

    def test_quadric_cone_not_cartier(self):
        """Confirm ``D₀`` is only ℚ-Cartier on the quadric cone."""
        from toric import WeilDivisor
        from toric.errors import NotCartier
        from toric.fans import cartier_data, quadric_cone_fan

        D = WeilDivisor(quadric_cone_fan(), [1, 0])
        self.assertRaises(NotCartier, cartier_data, D)
        self.assertEqual(cartier_data(2 * D).on((0, 1)), (-1, -2))

    def test_principal_divisor(self):
        """Confirm ``div(m)`` pairs `m` with each ray."""
        from toric.fans import divisor_of_character, projective_space_fan

        D = divisor_of_character(projective_space_fan(2), (1, 0))
        self.assertEqual(D.coefficients, (1, 0, -1))
        self.assertEqual(str(D), "1,0,-1")

    def test_wrong_coefficient_count(self):
        """Confirm one coefficient per ray is required."""
        from toric import WeilDivisor
        from toric.fans import projective_space_fan

        self.assertRaises(
            ValueError, WeilDivisor, projective_space_fan(2), [1, 0]
        )

    def test_global_sections_of_p2(self):
        """Confirm ``h⁰(ℙ², O(k)) = C(k + 2, 2)``."""
        from toric import WeilDivisor
        from toric.fans import global_sections, projective_space_fan

        fan = projective_space_fan(2)
        for k in range(4):
            sections = global_sections(WeilDivisor(fan, [k, 0, 0]))
            with self.subTest(k=k):
                self.assertEqual(len(sections), self.binomial(k + 2, 2))

    def test_square_divisor_polytope(self):
        """Confirm ``D₀ + D₂`` on ℙ¹×ℙ¹ gives a unit square."""
        from toric import WeilDivisor
        from toric.fans import divisor_polytope, product_p1_fan

        P = divisor_polytope(WeilDivisor(product_p1_fan(), [1, 0, 1, 0]))
        self.assertEqual(
            P.vertices(), [(-1, -1), (-1, 0), (0, -1), (0, 0)]
        )
        self.assertEqual(len(P.lattice_points()), 4)

    def test_unbounded_polytope(self):
        """Confirm an incomplete fan gives an unbounded polyhedron."""
        from toric import WeilDivisor
        from toric.errors import Unbounded
        from toric.fans import divisor_polytope, quadric_cone_fan

        P = divisor_polytope(WeilDivisor(quadric_cone_fan(), [0, 0]))
        self.assertRaises(Unbounded, P.lattice_points)

    def test_positivity_on_p2(self):
        """Confirm positivity of ``O(1)``, ``O`` and ``O(−1)``."""
        from toric import WeilDivisor
        from toric.fans import positivity, projective_space_fan

        fan = projective_space_fan(2)
        for a, expected in (
            (1, (True, True, True)),
            (0, (True, False, False)),
            (-1, (False, False, False)),
        ):
            p = positivity(WeilDivisor(fan, [a, 0, 0]))
            with self.subTest(a=a):
                self.assertEqual(
                    (p.globally_generated, p.ample, p.very_ample), expected
                )

    def test_positivity_needs_complete_fan(self):
        """Confirm positivity refuses an incomplete fan."""
        from toric import WeilDivisor
        from toric.errors import NotComplete
        from toric.fans import positivity, quadric_cone_fan

        D = WeilDivisor(quadric_cone_fan(), [2, 0])
        self.assertRaises(NotComplete, positivity, D)


def suite_fans():
    """Create and return the test suite for fans and divisors."""
    s = ut.TestSuite()
    tl = ut.TestLoader()
    s.addTests(
        [
            tl.loadTestsFromTestCase(TestFans),
            tl.loadTestsFromTestCase(TestOrbits),
            tl.loadTestsFromTestCase(TestDivisors),
        ]
    )

    return s


if __name__ == "__main__":
    print("Module not executable.")
