r"""*Regular subdivisions and initial complexes for* ``toric``.

``toric`` Toric Objects: Rings, Ideals and Cones.

A weight vector ω on a point configuration S at height one gives two
simplicial complexes: the regular subdivision Δ_ω read off the lower hull
of the lifted points, and the complex of squarefree monomials outside the
radical of the initial ideal in_ω(I_S). For generic ω they coincide; the
functions here compute both sides independently and compare them.

Normalized volumes are taken in the lattice generated by the points, so a
unimodular simplex has volume 1.

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

import attr

from .errors import NonGenericWeight
from .ideals import initial_ideal, toric_ideal
from .lattice import IntMatrix, integer_combination, span_basis
from .polyhedra import Cone, _as_config, regular_cells
from .polynomials import QQ, TermOrder
from .utils import Budget, dot


logger = logging.getLogger(__name__)

#: Limit on the standard monomials counted for one multiplicity
MULTIPLICITY_BUDGET = 10 ** 5


# ## GEOMETRY HELPERS ##


def at_height_one(S):
    """Return `S` itself if it lies at height one, else its homogenization."""
    S = _as_config(S)
    return S if S.is_homogeneous() else S.homogenize()


def _span_coordinates(points):
    basis = span_basis(points, len(points[0]))
    return [tuple(integer_combination(basis.vectors, p)) for p in points]


def _rank(cell, coords):
    return IntMatrix([coords[i] for i in cell], ncols=len(coords[0])).rank()


def _pulling_triangulation(cell, coords):
    """Triangulate `cell` by coning from its smallest index over facets."""
    cell = sorted(cell)
    if len(cell) == _rank(cell, coords):
        return [tuple(cell)]

    apex = cell[0]
    cone = Cone(len(coords[0]), [coords[i] for i in cell])
    simplices = []
    for a in cone.facets:
        facet = [i for i in cell if dot(a, coords[i]) == 0]
        if apex in facet:
            continue
        for s in _pulling_triangulation(facet, coords):
            simplices.append(tuple(sorted((apex,) + s)))
    return simplices


def _simplex_volume(simplex, coords):
    return abs(IntMatrix([coords[i] for i in simplex]).determinant())


def _cell_volume(cell, coords):
    return sum(
        _simplex_volume(s, coords)
        for s in _pulling_triangulation(cell, coords)
    )


def _closure(cells):
    faces = set()
    for c in cells:
        c = sorted(c)
        for k in range(len(c) + 1):
            faces.update(frozenset(f) for f in itt.combinations(c, k))
    return faces


def _sorted_faces(faces):
    return sorted(faces, key=lambda f: (len(f), sorted(f)))


# ## SUBDIVISIONS ##


@attr.s(slots=True, frozen=True)
class Subdivision:
    """Regular subdivision of a configuration at height one."""

    #: The configuration, at height one
    points = attr.ib()

    #: Cells, as sorted tuples of point indices
    cells = attr.ib(converter=lambda cs: tuple(tuple(sorted(c)) for c in cs))

    #: Heights inducing the subdivision
    heights = attr.ib(converter=lambda h: tuple(int(x) for x in h))

    _coords = attr.ib(init=False, repr=False, eq=False)

    def __attrs_post_init__(self):
        """Compute lattice coordinates for the points."""
        object.__setattr__(
            self, "_coords", _span_coordinates(self.points.points)
        )

    @property
    def rank(self):
        """Return the rank of the lattice spanned by the points."""
        return len(self._coords[0])

    def is_triangulation(self):
        """Report whether every cell is a simplex."""
        return all(
            len(c) == self.rank and _rank(c, self._coords) == self.rank
            for c in self.cells
        )

    def non_simplex_cells(self):
        """Return the cells that are not simplices."""
        return [
            c
            for c in self.cells
            if len(c) != self.rank or _rank(c, self._coords) != self.rank
        ]

    def faces(self):
        """Return the faces of all cells, sorted by size."""
        return _sorted_faces(_closure(self.cells))

    def normalized_volume(self, cell):
        """Return the normalized volume of a cell."""
        return _cell_volume(cell, self._coords)

    def total_volume(self):
        """Return the normalized volume of the convex hull of the points."""
        return _cell_volume(range(len(self.points)), self._coords)

    def to_json(self):
        """Return the JSON form."""
        return {
            "points": self.points.to_json(),
            "heights": list(self.heights),
            "cells": [list(c) for c in self.cells],
            "volumes": [self.normalized_volume(c) for c in self.cells],
            "triangulation": self.is_triangulation(),
        }


def regular_subdivision(S, omega):
    """Return the regular subdivision of `S` induced by the heights `omega`.

    Points that are not at height one are homogenized first.

    """
    S = at_height_one(S)
    omega = tuple(int(w) for w in omega)
    if len(omega) != len(S):
        raise ValueError("Need one height per point")

    cells = regular_cells(S.points, omega)
    logger.debug("subdivision of %d points: %d cells", len(S), len(cells))
    return Subdivision(S, cells, omega)


def require_triangulation(sub):
    """Raise :exc:`NonGenericWeight` unless `sub` is a triangulation."""
    bad = sub.non_simplex_cells()
    if bad:
        raise NonGenericWeight(sub.heights, bad[0])


def same_triangulation(S, omega1, omega2):
    """Report whether two weights induce the same subdivision of `S`."""
    return set(regular_subdivision(S, omega1).cells) == set(
        regular_subdivision(S, omega2).cells
    )


def perturb_weight(S, omega, candidates=8):
    """Return a generic weight refining `omega`, deterministically.

    The perturbation ``N·ω + v`` is tried for ``v = (i²)``, then
    ``v = (b^i)`` for ``b = 2, 3, …``, with ``N`` exceeding the total of
    `v`; the first candidate giving a triangulation wins.

    """
    S = at_height_one(S)
    omega = [int(w) for w in omega]
    n = len(S)

    trials = [[i * i for i in range(n)]]
    trials += [[b ** i for i in range(n)] for b in range(2, candidates + 2)]
    for v in trials:
        N = 1 + sum(v)
        w = [N * a + b for a, b in zip(omega, v)]
        sub = regular_subdivision(S, w)
        if sub.is_triangulation():
            logger.debug("perturbed %s to %s", omega, w)
            return tuple(w)

    raise NonGenericWeight(omega, sub.non_simplex_cells()[0])


# ## INITIAL COMPLEXES ##


def _minimal_sets(sets):
    sets = sorted(set(sets), key=lambda s: (len(s), sorted(s)))
    kept = []
    for s in sets:
        if not any(k <= s for k in kept):
            kept.append(s)
    return kept


@attr.s(slots=True, frozen=True)
class InitialComplex:
    """Complex of index sets whose monomials avoid a radical ideal."""

    #: Number of vertices
    nvertices = attr.ib(converter=int)

    #: Minimal non-faces (supports of the radical's generators)
    nonfaces = attr.ib(
        converter=lambda ns: tuple(_minimal_sets(frozenset(s) for s in ns))
    )

    def is_face(self, face):
        """Report whether `face` contains no minimal non-face."""
        face = frozenset(face)
        return not any(n <= face for n in self.nonfaces)

    def faces(self):
        """Return all faces, sorted by size."""
        found = set()
        frontier = [frozenset()] if self.is_face(()) else []
        while frontier:
            f = frontier.pop()
            if f in found:
                continue
            found.add(f)
            start = max(f) + 1 if f else 0
            for i in range(start, self.nvertices):
                g = f | {i}
                if self.is_face(g):
                    frontier.append(g)
        return _sorted_faces(found)

    def facets(self):
        """Return the inclusion-maximal faces."""
        faces = self.faces()
        return [f for f in faces if not any(f < g for g in faces)]

    def to_json(self):
        """Return the JSON form."""
        return {
            "vertices": self.nvertices,
            "nonfaces": [sorted(n) for n in self.nonfaces],
            "facets": [sorted(f) for f in self.facets()],
        }


def _monomial_supports(ideal):
    return [g.support() for g in ideal.generators]


def initial_complex(I, order):
    """Return the complex of squarefree monomials outside ``√in(I)``.

    `order` is a :class:`~toric.polynomials.TermOrder`; the radical of the
    initial monomial ideal is generated by the supports of its generators.

    """
    return InitialComplex(I.nvars, _monomial_supports(initial_ideal(I, order)))


def _weight_order(omega):
    """Shift `omega` to be nonnegative and refine it by grevlex."""
    low = min(omega)
    return TermOrder.weight([w - low for w in omega])


# ## CORRESPONDENCE ##


def _intersect_primes(complements):
    """Squarefree generators of the intersection of ``⟨x_i : i ∈ c⟩``."""
    result = [frozenset()]
    for c in complements:
        result = _minimal_sets(r | {i} for r in result for i in c)
    return result


@attr.s(slots=True, frozen=True)
class CorrespondenceReport:
    """Both sides of the initial-ideal / triangulation correspondence."""

    #: The triangulation from the lifted points
    subdivision = attr.ib()

    #: The complex from the initial ideal
    complex = attr.ib()

    #: Initial ideal generators, as strings
    initial_generators = attr.ib(converter=tuple)

    #: Whether the face sets agree
    faces_equal = attr.ib()

    #: Whether the radical equals the intersection of the cell primes
    radical_equal = attr.ib()

    @property
    def equal(self):
        """Return whether both checks agree."""
        return self.faces_equal and self.radical_equal

    def to_json(self):
        """Return the JSON form."""
        return {
            "subdivision": self.subdivision.to_json(),
            "initial_complex": self.complex.to_json(),
            "initial_ideal": list(self.initial_generators),
            "faces_equal": self.faces_equal,
            "radical_equal": self.radical_equal,
            "equal": self.equal,
        }


def check_sturmfels_correspondence(S, omega, field=QQ, budget=10 ** 6):
    """Compare ``Δ_ω`` with the initial complex of ``in_ω(I_S)``.

    Raises :exc:`~toric.errors.NonGenericWeight` when ω does not induce a
    triangulation.

    """
    S = at_height_one(S)
    sub = regular_subdivision(S, omega)
    require_triangulation(sub)

    I = toric_ideal(S, field, budget=budget)
    init = initial_ideal(I, tuple(w - min(omega) for w in omega), budget)
    if any(not g.is_monomial() for g in init.generators):
        raise NonGenericWeight(omega, range(len(S)))

    supports = _monomial_supports(init)
    cx = InitialComplex(len(S), supports)
    faces_equal = set(cx.faces()) == set(sub.faces())

    everything = frozenset(range(len(S)))
    primes = _intersect_primes(everything - frozenset(c) for c in sub.cells)
    radical_equal = set(_minimal_sets(supports)) == set(primes)

    logger.debug(
        "correspondence for %s: faces %s, radical %s",
        list(omega),
        faces_equal,
        radical_equal,
    )
    return CorrespondenceReport(
        sub, cx, init.format(), faces_equal, radical_equal
    )


# ## MULTIPLICITIES ##


def _divisible(e, gens):
    return any(all(a >= b for a, b in zip(e, g)) for g in gens)


def _standard_monomial_count(gens, nvars, budget):
    """Count monomials outside an Artinian monomial ideal."""
    if _divisible((0,) * nvars, gens):
        return 0
    seen = {(0,) * nvars}
    frontier = [(0,) * nvars]
    while frontier:
        e = frontier.pop()
        budget.tick()
        for i in range(nvars):
            f = e[:i] + (e[i] + 1,) + e[i + 1:]
            if f not in seen and not _divisible(f, gens):
                seen.add(f)
                frontier.append(f)
    return len(seen)


@attr.s(slots=True, frozen=True)
class MultiplicityRow:
    """One cell with its volume and the multiplicity of its prime."""

    cell = attr.ib(converter=tuple)
    volume = attr.ib()
    multiplicity = attr.ib()

    def to_json(self):
        """Return the JSON form."""
        return {
            "cell": list(self.cell),
            "volume": self.volume,
            "multiplicity": self.multiplicity,
        }


@attr.s(slots=True, frozen=True)
class MultiplicityReport:
    """Volumes against multiplicities for a regular triangulation."""

    rows = attr.ib(converter=tuple)

    #: Whether the initial ideal is squarefree
    squarefree = attr.ib()

    #: Whether ``in_ω(I_S)`` itself is a monomial ideal
    weight_monomial = attr.ib(default=True)

    @property
    def unimodular(self):
        """Return whether every cell has volume 1."""
        return all(r.volume == 1 for r in self.rows)

    @property
    def volumes_match(self):
        """Return whether every volume equals its multiplicity."""
        return all(r.volume == r.multiplicity for r in self.rows)

    @property
    def agrees(self):
        """Return whether squarefree holds exactly when unimodular does."""
        return self.squarefree == self.unimodular

    def to_json(self):
        """Return the JSON form."""
        return {
            "cells": [r.to_json() for r in self.rows],
            "squarefree": self.squarefree,
            "unimodular": self.unimodular,
            "volumes_match": self.volumes_match,
            "agrees": self.agrees,
            "weight_monomial": self.weight_monomial,
        }


def multiplicity_report(S, omega, field=QQ, budget=10 ** 6):
    """Compare cell volumes with multiplicities in ``in_ω(I_S)``.

    The multiplicity of ``⟨x_i : i ∉ σ⟩`` is the number of standard
    monomials of the initial ideal once the variables of σ are set to 1.

    The initial ideal is ``in_ω(I_S)``, generated by the weight initial
    forms of a Gröbner basis. When ω triangulates but ``in_ω(I_S)`` is not
    a monomial ideal, its leading terms under ω refined by grevlex are
    used instead and ``weight_monomial`` is false.

    """
    S = at_height_one(S)
    sub = regular_subdivision(S, omega)
    require_triangulation(sub)

    I = toric_ideal(S, field, budget=budget)
    low = min(omega)
    forms = initial_ideal(I, [w - low for w in omega], budget).generators
    weight_monomial = all(g.is_monomial() for g in forms)
    if weight_monomial:
        exps = [g.terms[0][0] for g in forms]
    else:
        order = _weight_order(omega)
        init = initial_ideal(I, order, budget)
        exps = [g.leading_monomial(order) for g in init.generators]

    rows = []
    for cell in sub.cells:
        rest = [i for i in range(len(S)) if i not in cell]
        local = [tuple(e[i] for i in rest) for e in exps]
        count = _standard_monomial_count(
            local, len(rest), Budget("standard monomials", MULTIPLICITY_BUDGET)
        )
        rows.append(MultiplicityRow(cell, sub.normalized_volume(cell), count))

    squarefree = all(max(e, default=0) <= 1 for e in exps)
    return MultiplicityReport(rows, squarefree, weight_monomial)
