r"""*Fans and torus-invariant divisors for* ``toric``.

``toric`` Toric Objects: Rings, Ideals and Cones.

Sign conventions: the local data of a Cartier divisor ``D = Σ a_u D_u``
on a maximal cone σ is the ``m_σ`` with ``⟨m_σ, u⟩ = −a_u`` for the rays
``u`` of σ, and the divisor polytope is ``P_D = {m : ⟨m, u⟩ ≥ −a_u}``.

**Author**
    toric contributors

**File Created**
    18 Oct 2026

**Copyright**
    \(c) toric contributors 2026

**License**
    The MIT License; see |license_txt|_ for full license terms

**Members**

"""

import itertools as itt
import logging
from math import ceil, floor

import attr

from .enums import JsonKey
from .errors import (
    NotAFace,
    NotCartier,
    NotComplete,
    NotPointed,
    NotSimplicial,
    RaysDoNotSpan,
    Unbounded,
)
from .lattice import (
    IntMatrix,
    cokernel,
    rank,
    solve_rational,
)
from .polyhedra import Cone, PointConfig, Polytope, is_very_ample
from .utils import dot, primitive


logger = logging.getLogger(__name__)


def _rays(rays):
    return tuple(primitive(r) for r in rays)


def _cones(cones):
    return tuple(sorted(tuple(sorted(int(i) for i in c)) for c in cones))


@attr.s(slots=True, frozen=True)
class Fan:
    """Fan given by primitive rays and its maximal cones.

    Each maximal cone is a sorted tuple of ray indices; the remaining cones
    are the faces of the maximal ones.

    """

    #: Rank of the lattice N
    ambient_rank = attr.ib(converter=int)

    #: Primitive ray generators
    rays = attr.ib(converter=_rays)

    #: Maximal cones as ray-index tuples
    cones = attr.ib(converter=_cones)

    def __attrs_post_init__(self):
        """Check that the listed rays of each cone are its extreme rays."""
        if any(len(r) != self.ambient_rank for r in self.rays):
            raise ValueError("Ray length differs from ambient rank")
        for c in self.cones:
            if any(not 0 <= i < len(self.rays) for i in c):
                raise ValueError("Cone {} has an unknown ray".format(c))
            cone = self.cone(c)
            if not cone.is_pointed():
                raise NotPointed(cone.lineality)
            if set(cone.rays) != {self.rays[i] for i in c}:
                raise ValueError("Cone {} lists non-extreme rays".format(c))

    @classmethod
    def from_json(cls, data):
        """Create from ``{"rays": […], "cones": […]}``.

        The ambient rank is read from ``"ambient_rank"`` or from the rays.

        """
        rays = [[int(x) for x in r] for r in data[JsonKey.Rays.value]]
        n = data.get(JsonKey.AmbientRank.value, len(rays[0]))
        fan = cls(n, rays, data[JsonKey.Cones.value])
        if data.get(JsonKey.Complete.value):
            fan.check_complete()
        return fan

    def to_json(self):
        """Return the JSON form."""
        return {
            JsonKey.AmbientRank.value: self.ambient_rank,
            JsonKey.Rays.value: [list(r) for r in self.rays],
            JsonKey.Cones.value: [list(c) for c in self.cones],
            JsonKey.Complete.value: self.is_complete(),
        }

    @property
    def nrays(self):
        """Return the number of rays."""
        return len(self.rays)

    def cone(self, indices):
        """Return the cone spanned by the rays with the given indices."""
        return Cone(self.ambient_rank, [self.rays[i] for i in indices])

    def all_cones(self):
        """Return every cone of the fan as a sorted ray-index tuple."""
        found = set()
        for c in self.cones:
            for f in self.cone(c).face_indices():
                found.add(tuple(sorted(c[i] for i in f)))
        return sorted(found, key=lambda c: (len(c), c))

    def is_simplicial(self):
        """Report whether every maximal cone has independent rays."""
        return all(
            rank([self.rays[i] for i in c], self.ambient_rank) == len(c)
            for c in self.cones
        )

    def is_smooth(self):
        """Report whether the rays of every maximal cone are a basis."""
        return all(
            len(c) == self.ambient_rank
            and abs(IntMatrix([self.rays[i] for i in c]).determinant()) == 1
            for c in self.cones
        )

    def walls(self):
        """Map each codimension-one face to the maximal cones containing it.

        Only full-dimensional simplicial maximal cones contribute.

        """
        walls = {}
        for c in self.cones:
            if len(c) != self.ambient_rank:
                continue
            for i in range(len(c)):
                w = c[:i] + c[i + 1:]
                walls.setdefault(w, []).append(c)
        return walls

    def check_complete(self):
        """Raise :exc:`NotComplete` unless the fan covers the space.

        A simplicial fan of full-dimensional cones is complete when every
        wall lies in exactly two maximal cones.

        """
        n = self.ambient_rank
        for c in self.cones:
            if len(c) != n or self.cone(c).dim != n:
                raise NotComplete(
                    "cone {} is not a full-dimensional simplex".format(list(c))
                )
        for w, cs in self.walls().items():
            if len(cs) != 2:
                raise NotComplete(
                    "wall {} lies in {} maximal cones".format(list(w), len(cs))
                )
        if not self.cones:
            raise NotComplete("no maximal cones")

    def is_complete(self):
        """Report whether :meth:`check_complete` passes."""
        try:
            self.check_complete()
        except NotComplete:
            return False
        return True

    def same_fan(self, other):
        """Compare as sets of cones of ray vectors."""

        def key(fan):
            return {frozenset(fan.rays[i] for i in c) for c in fan.cones}

        return set(self.rays) == set(other.rays) and key(self) == key(other)


# ## PRESETS ##


def _unit(n, i, s=1):
    return tuple(s * int(j == i) for j in range(n))


def projective_space_fan(n):
    """Return the fan of ℙⁿ: rays ``e₁ … eₙ, −Σeᵢ``."""
    rays = [_unit(n, i) for i in range(n)] + [(-1,) * n]
    return Fan(n, rays, itt.combinations(range(n + 1), n))


def product_p1_fan():
    """Return the fan of ℙ¹×ℙ¹ with rays ``e₁, −e₁, e₂, −e₂``."""
    rays = [(1, 0), (-1, 0), (0, 1), (0, -1)]
    return Fan(2, rays, [(0, 2), (0, 3), (1, 2), (1, 3)])


def hirzebruch_fan(r):
    """Return the Hirzebruch fan, rays ``e₁, e₂, −e₁ + r·e₂, −e₂``."""
    rays = [(1, 0), (0, 1), (-1, r), (0, -1)]
    return Fan(2, rays, [(0, 1), (1, 2), (2, 3), (0, 3)])


def quadric_cone_fan():
    """Return the single-cone fan with rays ``e₂`` and ``2e₁ − e₂``."""
    return Fan(2, [(0, 1), (2, -1)], [(0, 1)])


PRESETS = {
    "P1": lambda: projective_space_fan(1),
    "P2": lambda: projective_space_fan(2),
    "P3": lambda: projective_space_fan(3),
    "P1xP1": product_p1_fan,
    "F1": lambda: hirzebruch_fan(1),
    "F2": lambda: hirzebruch_fan(2),
    "F3": lambda: hirzebruch_fan(3),
    "quadric": quadric_cone_fan,
}


# ## ORBITS ##


def _face_set(C, F):
    """Return the generator indices of `C` lying in `F`."""
    if isinstance(F, Cone):
        gens = enumerate(C.generators)
        return frozenset(i for i, g in gens if F.contains(g))
    return frozenset(int(i) for i in F)


def orbit_distinguished_point(C, F):
    """Return the 0/1 point with ones on the generators of `C` in face `F`.

    `F` is a :class:`~toric.polyhedra.Cone` or a set of generator indices.

    """
    f = _face_set(C, F)
    if f not in set(C.face_indices()):
        raise NotAFace(sorted(f))
    return tuple(int(i in f) for i in range(len(C.generators)))


def point_on_variety(C, point, ideal=None):
    """Report whether `point` satisfies the toric ideal of the generators."""
    if ideal is None:
        from .ideals import toric_ideal

        ideal = toric_ideal(PointConfig(C.ambient_rank, C.generators))
    return all(g.evaluate(point) == 0 for g in ideal.generators)


def orbit_face_lattice(C):
    """Return ``(face, orbit dimension)`` for each face of a pointed cone."""
    if not C.is_pointed():
        raise NotPointed(C.lineality)
    return [
        (f, rank([C.generators[i] for i in f], C.ambient_rank))
        for f in C.face_indices()
    ]


# ## DIVISORS ##


@attr.s(slots=True, frozen=True)
class WeilDivisor:
    """Torus-invariant Weil divisor ``Σ a_u D_u`` on a fan."""

    #: The fan
    fan = attr.ib()

    #: One integer coefficient per ray
    coefficients = attr.ib(converter=lambda a: tuple(int(x) for x in a))

    @coefficients.validator
    def _check_length(self, attribute, value):
        if len(value) != self.fan.nrays:
            raise ValueError(
                "Need {} coefficients, got {}".format(
                    self.fan.nrays, len(value)
                )
            )

    def __add__(self, other):
        """Add two divisors on the same fan."""
        return WeilDivisor(
            self.fan,
            [a + b for a, b in zip(self.coefficients, other.coefficients)],
        )

    def __mul__(self, k):
        """Scale by an integer."""
        return WeilDivisor(self.fan, [k * a for a in self.coefficients])

    __rmul__ = __mul__

    def to_json(self):
        """Return the JSON form."""
        return {"coefficients": list(self.coefficients)}

    def __str__(self):
        """Render as a comma-separated coefficient list."""
        return ",".join(str(a) for a in self.coefficients)


def divisor_of_character(fan, m):
    """Return ``div(m) = Σ ⟨m, u⟩ D_u``."""
    return WeilDivisor(fan, [dot(m, u) for u in fan.rays])


def class_group(fan):
    """Return the class group, the cokernel of the ray pairing matrix."""
    r = rank(fan.rays, fan.ambient_rank)
    if r != fan.ambient_rank:
        raise RaysDoNotSpan(r, fan.ambient_rank)
    return cokernel(IntMatrix(fan.rays, ncols=fan.ambient_rank))


@attr.s(slots=True, frozen=True)
class CartierData:
    """Local data ``m_σ`` of a Cartier divisor, one per maximal cone."""

    #: The divisor
    divisor = attr.ib()

    #: ``m_σ`` for each maximal cone, in the fan's cone order
    local = attr.ib(converter=lambda ms: tuple(tuple(m) for m in ms))

    def on(self, cone):
        """Return ``m_σ`` for a maximal cone."""
        return self.local[self.divisor.fan.cones.index(tuple(cone))]

    def support_function(self, u):
        """Return ``h(u) = ⟨m_σ, u⟩`` for any σ containing `u`."""
        fan = self.divisor.fan
        for c, m in zip(fan.cones, self.local):
            if fan.cone(c).contains(u):
                return dot(m, u)
        raise NotComplete("{} lies outside the support".format(list(u)))

    def to_json(self):
        """Return the JSON form."""
        return {
            "cones": [list(c) for c in self.divisor.fan.cones],
            "local": [list(m) for m in self.local],
        }


def cartier_data(D):
    """Return the Cartier data of `D`, or raise :exc:`NotCartier`.

    Maximal cones must be full-dimensional and simplicial.

    """
    fan = D.fan
    n = fan.ambient_rank
    local = []
    for c in fan.cones:
        if len(c) != n or rank([fan.rays[i] for i in c], n) != n:
            raise NotSimplicial(
                list(c), "maximal cones must be full-dimensional simplices"
            )
        sol = solve_rational(
            [fan.rays[i] for i in c], [-D.coefficients[i] for i in c]
        )
        if sol is None or any(x.denominator != 1 for x in sol):
            raise NotCartier(list(c), sol)
        local.append(tuple(int(x) for x in sol))

    data = CartierData(D, local)
    for w, cs in fan.walls().items():
        ms = {data.on(c) for c in cs}
        for u in (fan.rays[i] for i in w):
            if len({dot(m, u) for m in ms}) > 1:
                raise NotCartier(list(cs[0]))

    return data


# ## DIVISOR POLYTOPES ##


@attr.s(slots=True, frozen=True)
class DivisorPolytope:
    """The polyhedron ``{m : ⟨m, u⟩ ≥ −a_u}`` of a Weil divisor."""

    #: The divisor
    divisor = attr.ib()

    @property
    def inequalities(self):
        """Return ``(u, −a_u)`` pairs meaning ``⟨m, u⟩ ≥ −a_u``."""
        D = self.divisor
        return [(u, -a) for u, a in zip(D.fan.rays, D.coefficients)]

    def contains(self, m):
        """Report whether `m` satisfies every inequality."""
        return all(dot(m, u) >= b for u, b in self.inequalities)

    def recession(self):
        """Return the rays of the recession cone ``{m : ⟨m, u⟩ ≥ 0}``."""
        fan = self.divisor.fan
        dual = Cone(fan.ambient_rank, fan.rays).dual()
        return list(dual.rays) + [
            v for b in dual.lineality for v in (b, tuple(-x for x in b))
        ]

    def vertices(self):
        """Return the rational vertices, sorted."""
        n = self.divisor.fan.ambient_rank
        ineq = self.inequalities
        found = set()
        for rows in itt.combinations(ineq, n):
            A = [u for u, _ in rows]
            if rank(A, n) != n:
                continue
            m = solve_rational(A, [b for _, b in rows])
            if all(dot(m, u) >= b for u, b in ineq):
                found.add(m)
        return sorted(found)

    def lattice_points(self):
        """Return the lattice points, sorted.

        Raises :exc:`~toric.errors.Unbounded` for an unbounded polyhedron.

        """
        rec = self.recession()
        if rec:
            raise Unbounded(rec)

        verts = self.vertices()
        if not verts:
            return []
        n = self.divisor.fan.ambient_rank
        box = [
            range(
                floor(min(v[i] for v in verts)),
                ceil(max(v[i] for v in verts)) + 1,
            )
            for i in range(n)
        ]
        logger.debug("divisor polytope box %s", box)
        return [m for m in itt.product(*box) if self.contains(m)]

    def to_json(self):
        """Return the JSON form."""
        return {
            "inequalities": [
                {"normal": list(u), "bound": b} for u, b in self.inequalities
            ],
            "vertices": [list(v) for v in self.vertices()],
        }


def divisor_polytope(D):
    """Return the divisor polytope ``P_D``."""
    return DivisorPolytope(D)


def global_sections(D):
    """Return the lattice points of ``P_D`` as a point configuration."""
    points = divisor_polytope(D).lattice_points()
    return PointConfig(D.fan.ambient_rank, points)


# ## POSITIVITY ##


@attr.s(slots=True, frozen=True)
class Positivity:
    """Positivity of a Cartier divisor on a complete fan."""

    globally_generated = attr.ib()
    ample = attr.ib()
    very_ample = attr.ib()

    def to_json(self):
        """Return the JSON form."""
        return {
            "globally_generated": self.globally_generated,
            "ample": self.ample,
            "very_ample": self.very_ample,
        }


def _global_convexity(data, strict):
    fan = data.divisor.fan
    a = data.divisor.coefficients
    for c, m in zip(fan.cones, data.local):
        for j, u in enumerate(fan.rays):
            if j in c:
                continue
            v = dot(m, u)
            if v < -a[j] or (strict and v == -a[j]):
                return False
    return True


def positivity(D, node_budget=10 ** 6):
    """Decide global generation, ampleness and very ampleness of `D`.

    Convexity of the support function is checked across every wall: for
    adjacent maximal cones σ, τ and the ray ``u`` of τ outside σ,
    ``⟨m_σ, u⟩ ≥ −a_u``, strictly for ampleness. Very ampleness also
    requires the polytope of the ``m_σ`` to be very ample.

    """
    fan = D.fan
    fan.check_complete()
    data = cartier_data(D)

    gg = ample = True
    for w, (s, t) in fan.walls().items():
        for c, d in ((s, t), (t, s)):
            m = data.on(c)
            (j,) = set(d) - set(w)
            v = dot(m, fan.rays[j])
            bound = -D.coefficients[j]
            if v < bound:
                gg = ample = False
            elif v == bound:
                ample = False

    if logger.isEnabledFor(logging.DEBUG):
        if gg != _global_convexity(data, False) or ample != (
            _global_convexity(data, True)
        ):
            logger.warning("wall and global convexity disagree for %s", D)

    very = False
    if ample:
        P = Polytope.from_points(data.local)
        very = is_very_ample(P, node_budget)

    return Positivity(gg, ample, very)
