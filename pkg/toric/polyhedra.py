r"""*Rational polyhedral cones and lattice polytopes for* ``toric``.

``toric`` Toric Objects: Rings, Ideals and Cones.

Cones are held by their generators; the inequality form is derived on
demand with the double description method and cached. Hilbert bases come
from the half-open parallelepipeds of a regular triangulation of the
extreme rays, after which the reducible candidates are pruned.

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

from fractions import Fraction
from functools import lru_cache
import itertools as itt
import logging
from math import factorial
import random

import attr
import sympy

from .enums import JsonKey
from .errors import (
    InterpolationMismatch,
    InvalidPolytope,
    NonGenericWeight,
    NotFullDimensional,
    NotPointed,
)
from .lattice import (
    IntMatrix,
    integer_combination,
    saturate_sublattice,
    smith_normal_form,
    span_basis,
    to_fraction,
)
from .utils import Budget, dot, primitive


logger = logging.getLogger(__name__)


def _vectors(vs):
    return tuple(tuple(int(x) for x in v) for v in vs)


def _primitive_generators(vs):
    return tuple(primitive(v) for v in _vectors(vs) if any(v))


def _negate(v):
    return tuple(-x for x in v)


# ## DOUBLE DESCRIPTION ##


def _double_description(constraints, d):
    """Return extreme rays and a lineality basis of ``{x : A x >= 0}``.

    Rays are primitive and sorted; the lineality basis is in Hermite form.

    """
    lineality = [tuple(int(i == j) for j in range(d)) for i in range(d)]
    rays = []
    done = []

    for a in constraints:
        if not any(a):
            continue

        vals = [dot(a, l) for l in lineality]
        k = next((i for i, v in enumerate(vals) if v != 0), None)

        if k is not None:
            # The hyperplane cuts the lineality space: absorb one direction
            l0, v0 = lineality[k], vals[k]
            if v0 < 0:
                l0, v0 = _negate(l0), -v0

            lineality = [
                primitive([v0 * x - v * y for x, y in zip(l, l0)])
                for i, (l, v) in enumerate(zip(lineality, vals))
                if i != k
            ]
            rays = [
                primitive([v0 * x - dot(a, r) * y for x, y in zip(r, l0)])
                for r in rays
            ]
            rays = [r for r in rays if any(r)] + [primitive(l0)]

        else:
            zsets = [
                frozenset(j for j, c in enumerate(done) if dot(c, r) == 0)
                for r in rays
            ]
            signs = [dot(a, r) for r in rays]
            pos = [i for i, s in enumerate(signs) if s > 0]
            neg = [i for i, s in enumerate(signs) if s < 0]

            new = [rays[i] for i, s in enumerate(signs) if s >= 0]
            for p, n in itt.product(pos, neg):
                common = zsets[p] & zsets[n]
                if any(
                    common <= zsets[r]
                    for r in range(len(rays))
                    if r not in (p, n)
                ):
                    continue
                new.append(
                    primitive(
                        [
                            signs[p] * x - signs[n] * y
                            for x, y in zip(rays[n], rays[p])
                        ]
                    )
                )
            rays = new

        rays = list(dict.fromkeys(r for r in rays if any(r)))
        done.append(tuple(a))
        logger.debug("double description: %d rays", len(rays))

    return (
        tuple(sorted(rays)),
        span_basis(lineality, d).vectors if lineality else (),
    )


@lru_cache(maxsize=1024)
def _h_form(ambient_rank, generators):
    return _double_description(generators, ambient_rank)


@lru_cache(maxsize=1024)
def _v_form(ambient_rank, generators):
    facets, equations = _h_form(ambient_rank, generators)
    return _double_description(
        facets + equations + tuple(_negate(e) for e in equations),
        ambient_rank,
    )


@attr.s(slots=True, frozen=True)
class Cone:
    """Rational polyhedral cone generated by integer vectors.

    Generators are stored primitive, in input order, with zero vectors
    dropped. The facet inequalities ``⟨a, x⟩ ≥ 0`` and the equations
    ``⟨e, x⟩ = 0`` of the linear span are computed lazily.

    """

    #: Rank of the ambient lattice
    ambient_rank = attr.ib(converter=int)

    #: Primitive generators
    generators = attr.ib(converter=_primitive_generators)

    def __attrs_post_init__(self):
        """Check generator lengths."""
        if any(len(g) != self.ambient_rank for g in self.generators):
            raise ValueError("Generator length differs from ambient rank")

    @property
    def facets(self):
        """Return the facet normals."""
        return _h_form(self.ambient_rank, self.generators)[0]

    @property
    def equations(self):
        """Return a basis of the equations of the linear span."""
        return _h_form(self.ambient_rank, self.generators)[1]

    @property
    def rays(self):
        """Return the primitive extreme rays (modulo the lineality space)."""
        return _v_form(self.ambient_rank, self.generators)[0]

    @property
    def lineality(self):
        """Return a basis of the lineality space."""
        return _v_form(self.ambient_rank, self.generators)[1]

    @property
    def dim(self):
        """Return the dimension of the linear span."""
        return self.ambient_rank - len(self.equations)

    def is_pointed(self):
        """Report whether the cone contains no line."""
        return not self.lineality

    def contains(self, x):
        """Report whether `x` lies in the cone."""
        return all(dot(a, x) >= 0 for a in self.facets) and all(
            dot(e, x) == 0 for e in self.equations
        )

    def dual(self):
        """Return the dual cone."""
        return dual_cone(self)

    def face_indices(self):
        """Return every face as the frozenset of generator indices on it."""
        zsets = [
            frozenset(
                i for i, g in enumerate(self.generators) if dot(a, g) == 0
            )
            for a in self.facets
        ]
        faces = {frozenset(range(len(self.generators)))}
        frontier = list(faces)
        while frontier:
            face = frontier.pop()
            for z in zsets:
                sub = face & z
                if sub not in faces:
                    faces.add(sub)
                    frontier.append(sub)

        return sorted(faces, key=lambda f: (len(f), sorted(f)))

    def faces(self):
        """Return every face as a :class:`Cone`."""
        return [
            Cone(self.ambient_rank, [self.generators[i] for i in sorted(f)])
            for f in self.face_indices()
        ]

    def to_json(self):
        """Return the JSON form of the generators."""
        return {
            JsonKey.AmbientRank.value: self.ambient_rank,
            JsonKey.Points.value: [list(g) for g in self.generators],
        }


def dual_cone(C):
    """Return the dual cone ``{y : ⟨y, x⟩ ≥ 0 for x in C}``.

    The dual of the zero cone is the whole space, generated by ± a basis.

    """
    gens = list(C.facets) + list(C.equations)
    gens += [_negate(e) for e in C.equations]
    return Cone(C.ambient_rank, gens)


def cone_membership(C, x):
    """Report whether the integer vector `x` lies in `C`."""
    return C.contains(x)


def faces(C):
    """Return all faces of `C`, from the minimal face up to `C` itself."""
    return C.faces()


# ## POINT CONFIGURATIONS ##


@attr.s(slots=True, frozen=True)
class PointConfig:
    """Ordered list of distinct lattice points.

    The list order fixes the variable order of the associated toric ideal.

    """

    #: Rank of the ambient lattice
    ambient_rank = attr.ib(converter=int)

    #: Points, as integer tuples
    points = attr.ib(converter=_vectors)

    def __attrs_post_init__(self):
        """Check point lengths and distinctness."""
        if any(len(p) != self.ambient_rank for p in self.points):
            raise ValueError("Point length differs from ambient rank")
        if len(set(self.points)) != len(self.points):
            raise ValueError("Points of a configuration must be distinct")

    def __len__(self):
        """Return the number of points."""
        return len(self.points)

    def __iter__(self):
        """Iterate over the points."""
        return iter(self.points)

    def homogenize(self):
        """Return the configuration lifted to height one, ``p ↦ (p, 1)``."""
        return PointConfig(
            self.ambient_rank + 1, [p + (1,) for p in self.points]
        )

    def is_homogeneous(self):
        """Report whether the points lie on an affine hyperplane at height 1.

        That is, whether some integer covector takes the value 1 on every
        point.

        """
        if not self.points:
            return True
        return (
            integer_combination(
                IntMatrix(self.points).transpose().entries,
                [1] * len(self.points),
            )
            is not None
        )

    @classmethod
    def from_json(cls, data):
        """Create a configuration from ``{"ambient_rank": n, "points": …}``.

        A bare list of points is accepted as well.

        """
        if isinstance(data, dict):
            points = data[JsonKey.Points.value]
            rank = data.get(JsonKey.AmbientRank.value)
        else:
            points, rank = data, None
        if rank is None:
            rank = len(points[0]) if points else 0
        return cls(rank, points)

    def to_json(self):
        """Return the JSON form."""
        return {
            JsonKey.AmbientRank.value: self.ambient_rank,
            JsonKey.Points.value: [list(p) for p in self.points],
        }


def _as_config(S):
    if isinstance(S, PointConfig):
        return S
    points = _vectors(S)
    return PointConfig(len(points[0]) if points else 0, points)


# ## TRIANGULATIONS OF VECTOR CONFIGURATIONS ##


def regular_cells(vectors, heights):
    """Return the cells of the regular subdivision induced by `heights`.

    The vectors (for point configurations, the points at height one) are
    lifted by their heights; each lower facet of the lifted cone gives one
    cell, the set of vector indices on it. A point on a lower facet is in
    the cell even if it is not a vertex of it.

    """
    vectors = _vectors(vectors)
    d = len(vectors[0])
    basis = span_basis(vectors, d)
    coords = [tuple(integer_combination(basis.vectors, v)) for v in vectors]
    k = basis.rank

    lifted = [c + (int(h),) for c, h in zip(coords, heights)]
    up = tuple(int(i == k) for i in range(k + 1))
    cone = Cone(k + 1, lifted + [up])

    cells = {
        frozenset(i for i, v in enumerate(lifted) if dot(a, v) == 0)
        for a in cone.facets
        if a[-1] > 0
    }
    if not cells:
        # Flat lifts with no lower facet still have the single full cell
        cells = {frozenset(range(len(vectors)))}

    return sorted(cells, key=sorted)


def _is_simplicial(cell, coords):
    k = len(coords[0])
    return (
        len(cell) == k
        and IntMatrix([coords[i] for i in cell]).rank() == k
    )


# ## HILBERT BASES ##


def _parallelepiped_points(W):
    """Lattice points of the half-open parallelepiped of the rows of `W`."""
    k = len(W)
    S, _, V = smith_normal_form(W)
    diag = [S.entries[i][i] for i in range(k)]
    V_inv = V.to_sympy().inv()
    W_inv = IntMatrix(W).to_sympy().inv()

    points = []
    for c in itt.product(*[range(d) for d in diag]):
        x = sympy.Matrix([list(c)]) * V_inv
        lam = [to_fraction(v) for v in x * W_inv]
        frac = [f - f.numerator // f.denominator for f in lam]
        pt = tuple(
            int(sum(frac[i] * W[i][j] for i in range(k))) for j in range(k)
        )
        if any(pt):
            points.append(pt)

    return points


def _full_rank_hilbert_basis(rays, seed=0):
    """Hilbert basis of a pointed full-dimensional cone in ℤ^k."""
    k = len(rays[0])
    cone = Cone(k, rays)

    if len(rays) == k:
        cells = [frozenset(range(k))]
    else:
        rng = random.Random(seed)
        for attempt in itt.count(1):
            heights = [rng.randint(0, 8 * attempt * len(rays)) for _ in rays]
            cells = regular_cells(rays, heights)
            if all(_is_simplicial(c, rays) for c in cells):
                break
            if attempt > 200:
                raise NonGenericWeight(heights, max(cells, key=len))

    candidates = set(rays)
    for cell in cells:
        W = [rays[i] for i in sorted(cell)]
        candidates.update(_parallelepiped_points(W))

    logger.debug(
        "hilbert basis: %d cells, %d candidates", len(cells), len(candidates)
    )

    return sorted(
        x
        for x in candidates
        if not any(
            h != x and cone.contains(tuple(a - b for a, b in zip(x, h)))
            for h in candidates
        )
    )


def _sublattice_coordinates(vectors, basis):
    return [tuple(integer_combination(basis.vectors, v)) for v in vectors]


def _from_coordinates(coords, basis):
    return tuple(
        sum(c * b[j] for c, b in zip(coords, basis.vectors))
        for j in range(basis.ambient_rank)
    )


def hilbert_basis(C, seed=0):
    """Return the Hilbert basis of the pointed cone `C`, sorted.

    Raises :exc:`~toric.errors.NotPointed` when `C` contains a line.

    """
    if not C.is_pointed():
        raise NotPointed(C.lineality)
    rays = C.rays
    if not rays:
        return []

    lat = saturate_sublattice(span_basis(rays, C.ambient_rank))
    coords = _sublattice_coordinates(rays, lat)
    return sorted(
        _from_coordinates(h, lat)
        for h in _full_rank_hilbert_basis(coords, seed)
    )


# ## MONOIDS ##


@attr.s(slots=True, frozen=True)
class SaturationReport:
    """Outcome of a monoid saturation test."""

    #: Whether the monoid equals its saturation
    saturated = attr.ib()

    #: Hilbert basis of the saturation, in ambient coordinates
    hilbert_basis = attr.ib(converter=_vectors)

    #: Hilbert basis elements missing from the monoid
    missing = attr.ib(converter=_vectors)

    #: Largest number of summands a membership search may need
    bound = attr.ib()

    def to_json(self):
        """Return the JSON form."""
        return {
            "saturated": self.saturated,
            "hilbert_basis": [list(h) for h in self.hilbert_basis],
            "missing": [list(h) for h in self.missing],
            "bound": self.bound,
        }


def _monoid_member(x, gens, cone, budget):
    """Decide whether `x` is a nonnegative integer combination of `gens`."""
    failed = set()

    def search(y, start):
        if not any(y):
            return True
        if (y, start) in failed:
            return False
        budget.tick()
        for i in range(start, len(gens)):
            z = tuple(a - b for a, b in zip(y, gens[i]))
            if cone.contains(z) and search(z, i):
                return True
        failed.add((y, start))
        return False

    return search(tuple(x), 0)


def saturation_report(S, node_budget=10 ** 6, seed=0):
    """Compare the monoid generated by `S` with its saturation.

    The saturation is taken inside the lattice the points span. Raises
    :exc:`~toric.errors.NotPointed` when the cone over `S` contains a line.

    """
    S = _as_config(S)
    points = [p for p in S.points if any(p)]
    if not points:
        return SaturationReport(True, [], [], 0)

    lat = span_basis(points, S.ambient_rank)
    gens = sorted(set(_sublattice_coordinates(points, lat)), reverse=True)
    k = lat.rank

    cone = Cone(k, gens)
    if not cone.is_pointed():
        raise NotPointed(
            [_from_coordinates(v, lat) for v in cone.lineality]
        )

    hb = _full_rank_hilbert_basis(list(cone.rays), seed)

    grading = [sum(col) for col in zip(*cone.facets)]
    least = min(dot(grading, g) for g in gens)
    bound = max(dot(grading, h) // least for h in hb)

    budget = Budget("monoid search nodes", node_budget)
    missing = [h for h in hb if not _monoid_member(h, gens, cone, budget)]
    logger.debug(
        "saturation: %d Hilbert basis elements, %d missing, bound %d",
        len(hb),
        len(missing),
        bound,
    )

    return SaturationReport(
        not missing,
        [_from_coordinates(h, lat) for h in hb],
        [_from_coordinates(h, lat) for h in missing],
        bound,
    )


def monoid_is_saturated(S, node_budget=10 ** 6):
    """Report whether the monoid generated by `S` is saturated."""
    return saturation_report(S, node_budget).saturated


def is_normal_configuration(S, node_budget=10 ** 6):
    """Report whether the height-one lift of the point set `S` is normal."""
    return monoid_is_saturated(_as_config(S).homogenize(), node_budget)


# ## POLYTOPES ##


@attr.s(slots=True, frozen=True)
class Polytope:
    """Lattice polytope given by its vertices."""

    #: Rank of the ambient lattice
    ambient_rank = attr.ib(converter=int)

    #: Vertices, exactly the extreme points of their convex hull
    vertices = attr.ib(converter=_vectors)

    def __attrs_post_init__(self):
        """Check that every listed point is an extreme point."""
        if not self.vertices:
            raise InvalidPolytope(None)
        if any(len(v) != self.ambient_rank for v in self.vertices):
            raise ValueError("Vertex length differs from ambient rank")

        rays = set(self.cone().rays)
        seen = set()
        for v in self.vertices:
            if v in seen or v + (1,) not in rays:
                raise InvalidPolytope(v)
            seen.add(v)

    @classmethod
    def from_points(cls, points):
        """Create the convex hull of `points`, keeping only extreme ones."""
        points = list(dict.fromkeys(_vectors(points)))
        d = len(points[0])
        rays = set(Cone(d + 1, [p + (1,) for p in points]).rays)
        return cls(d, [p for p in points if p + (1,) in rays])

    @classmethod
    def from_json(cls, data):
        """Create from ``{"ambient_rank": n, "points": …}`` via the hull."""
        return cls.from_points(PointConfig.from_json(data).points)

    def to_json(self):
        """Return the JSON form."""
        return {
            JsonKey.AmbientRank.value: self.ambient_rank,
            JsonKey.Points.value: [list(v) for v in self.vertices],
        }

    def cone(self):
        """Return the cone over the polytope placed at height one."""
        return Cone(self.ambient_rank + 1, [v + (1,) for v in self.vertices])

    @property
    def dim(self):
        """Return the dimension of the polytope."""
        return self.cone().dim - 1

    def contains(self, x, k=1):
        """Report whether `x` lies in the dilate ``k·P``."""
        return self.cone().contains(tuple(x) + (k,))

    def translate(self, v):
        """Return the polytope shifted by `v`."""
        return Polytope(
            self.ambient_rank,
            [tuple(a + b for a, b in zip(w, v)) for w in self.vertices],
        )


def unit_simplex(d):
    """Return the standard simplex ``conv(0, e₁, …, e_d)``."""
    return Polytope(
        d,
        [(0,) * d]
        + [tuple(int(i == j) for j in range(d)) for i in range(d)],
    )


def unit_cube(d):
    """Return the cube ``[0, 1]^d``."""
    return Polytope(d, list(itt.product((0, 1), repeat=d)))


def segment(d):
    """Return the segment ``[0, d]`` in ℤ."""
    return Polytope(1, [(0,), (d,)])


def scroll_polytope(r):
    """Return ``conv(0, f₁, f₂, r·f₁ + f₂)`` for ``r ≥ 1``."""
    return Polytope(2, [(0, 0), (1, 0), (0, 1), (r, 1)])


def veronese_points(n, r):
    """Return all exponent vectors of degree `r` in `n` variables."""
    points = []
    for combo in itt.combinations_with_replacement(range(n), r):
        points.append(tuple(combo.count(i) for i in range(n)))
    return PointConfig(n, sorted(points, reverse=True))


def lattice_points(P, k=1):
    """Return the lattice points of ``k·P`` by bounding-box enumeration."""
    ranges = [
        range(k * min(col), k * max(col) + 1) for col in zip(*P.vertices)
    ]
    cone = P.cone()
    pts = [x for x in itt.product(*ranges) if cone.contains(x + (k,))]
    return PointConfig(P.ambient_rank, sorted(pts))


def is_normal_polytope(P, node_budget=10 ** 6):
    """Report whether `P` is normal (in the lattice it spans)."""
    return is_normal_configuration(lattice_points(P), node_budget)


def is_very_ample(P, node_budget=10 ** 6):
    """Report whether every vertex monoid of `P` is saturated."""
    points = lattice_points(P).points
    for v in P.vertices:
        shifted = [tuple(a - b for a, b in zip(p, v)) for p in points]
        if not monoid_is_saturated(
            _as_config([p for p in shifted if any(p)]), node_budget
        ):
            logger.debug("vertex %s has a non-saturated monoid", v)
            return False
    return True


def is_smooth_polytope(P):
    """Report whether every vertex cone of `P` is unimodular.

    Edge directions are read in the saturated lattice of the affine span.

    """
    v0 = P.vertices[0]
    diffs = [tuple(a - b for a, b in zip(v, v0)) for v in P.vertices[1:]]
    if not any(any(d) for d in diffs):
        return True

    lat = saturate_sublattice(span_basis(diffs, P.ambient_rank))
    dim = lat.rank

    for v in P.vertices:
        edges = _sublattice_coordinates(
            [tuple(a - b for a, b in zip(w, v)) for w in P.vertices if w != v],
            lat,
        )
        rays = Cone(dim, edges).rays
        if len(rays) != dim or abs(IntMatrix(rays).determinant()) != 1:
            logger.debug("vertex %s is not smooth", v)
            return False

    return True


def smooth_implies_normal_evidence(polytopes, node_budget=10 ** 6):
    """Check smoothness against normality on a list of polytopes.

    Returns a |list| of ``(smooth, normal)`` pairs, one per polytope.

    """
    return [
        (is_smooth_polytope(P), is_normal_polytope(P, node_budget))
        for P in polytopes
    ]


# ## EHRHART POLYNOMIALS ##


@attr.s(slots=True, frozen=True)
class EhrhartPolynomial:
    """Polynomial with rational coefficients, constant term first."""

    #: Coefficients in increasing degree
    coefficients = attr.ib(
        converter=lambda cs: tuple(Fraction(c) for c in cs)
    )

    @property
    def degree(self):
        """Return the degree."""
        return len(self.coefficients) - 1

    @property
    def leading(self):
        """Return the leading coefficient."""
        return self.coefficients[-1]

    def __call__(self, n):
        """Evaluate at the integer `n`."""
        value = sum(c * n ** i for i, c in enumerate(self.coefficients))
        return int(value) if value.denominator == 1 else value

    def to_json(self):
        """Return the coefficient list."""
        return list(self.coefficients)

    def __str__(self):
        """Render with the variable ``n``."""
        terms = []
        for i, c in reversed(list(enumerate(self.coefficients))):
            if c == 0:
                continue
            mono = "" if i == 0 else ("n" if i == 1 else "n^{}".format(i))
            coef = str(c)
            if mono and c == 1:
                coef = ""
            sep = "*" if coef and mono else ""
            terms.append(coef + sep + mono)
        return " + ".join(terms) if terms else "0"


def ehrhart(P):
    """Interpolate the Ehrhart polynomial of `P` from dilate counts.

    Raises :exc:`~toric.errors.InterpolationMismatch` if the polynomial
    disagrees with the direct count at ``k = dim P + 1``.

    """
    d = P.dim
    counts = [len(lattice_points(P, k)) for k in range(d + 1)]

    if d == 0:
        poly = EhrhartPolynomial([counts[0]])
    else:
        n = sympy.Symbol("n")
        expr = sympy.interpolate(list(zip(range(d + 1), counts)), n)
        coeffs = sympy.Poly(expr, n).all_coeffs()[::-1]
        poly = EhrhartPolynomial([to_fraction(c) for c in coeffs])

    found = len(lattice_points(P, d + 1))
    if poly(d + 1) != found:
        raise InterpolationMismatch(d + 1, poly(d + 1), found)

    return poly


def degree_of_variety(P):
    """Return the normalized volume ``(dim P)! · vol(P)``."""
    poly = ehrhart(P)
    return int(factorial(P.dim) * poly.coefficients[P.dim])


# ## NORMAL FANS ##


def normal_fan(P):
    """Return the normal fan of a full-dimensional polytope.

    Maximal cones are the duals of the vertex cones ``cone(P − v)``; rays
    are sorted lexicographically. Completeness is verified.

    """
    from .fans import Fan

    if P.dim != P.ambient_rank:
        raise NotFullDimensional(P.dim, P.ambient_rank)

    duals = []
    for v in P.vertices:
        tangent = Cone(
            P.ambient_rank,
            [tuple(a - b for a, b in zip(w, v)) for w in P.vertices if w != v],
        )
        duals.append(dual_cone(tangent).rays)

    rays = sorted({r for rs in duals for r in rs})
    index = {r: i for i, r in enumerate(rays)}
    cones = [frozenset(index[r] for r in rs) for rs in duals]

    fan = Fan(P.ambient_rank, rays, cones)
    fan.check_complete()
    return fan
