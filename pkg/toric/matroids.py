r"""*Matroids, exchanges and base polytopes for* ``toric``.

``toric`` Toric Objects: Rings, Ideals and Cones.

Bases are kept in the order given; that order fixes the variables
``a1, a2, …`` of the exchange ideal and of the toric ideal of the base
polytope. A degree-``d`` monomial in those variables is a multiset of
``d`` bases, and its image is the multiset union of their elements.

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

from collections import deque
import itertools as itt
import logging

import attr
import networkx as nx

from .enums import JsonKey
from .errors import Disconnected, InvalidMatroid, TooLarge
from .ideals import Ideal, colon, frobenius_power, toric_ideal
from .lattice import determinant, rank
from .polyhedra import (
    PointConfig,
    Polytope,
    is_normal_configuration,
    lattice_points,
)
from .polynomials import GF2, QQ, Polynomial
from .utils import Budget


logger = logging.getLogger(__name__)

#: Largest edge count for graphic matroids
EDGE_LIMIT = 12

#: Largest number of vertex multisets tried by the ICP check
ICP_LIMIT = 10 ** 6


def _bases(bases):
    return tuple(tuple(sorted(int(e) for e in b)) for b in bases)


def exchange_axiom_holds(bases):
    """Report whether a family of sets satisfies the basis exchange axiom."""
    family = {frozenset(b) for b in bases}
    for B1, B2 in itt.product(family, repeat=2):
        for x in B1 - B2:
            if not any((B1 - {x}) | {y} in family for y in B2 - B1):
                return False
    return True


@attr.s(slots=True, frozen=True)
class Matroid:
    """Matroid on ``0 … ground−1`` given by its bases, in a fixed order."""

    #: Size of the ground set
    ground = attr.ib(converter=int)

    #: Bases as sorted element tuples, in variable order
    bases = attr.ib(converter=_bases)

    _lookup = attr.ib(init=False, repr=False, eq=False)

    def __attrs_post_init__(self):
        """Check sizes, distinctness and the exchange axiom."""
        if not self.bases:
            raise InvalidMatroid("no bases")
        if len({len(b) for b in self.bases}) != 1:
            raise InvalidMatroid("bases of different sizes")
        if len(set(self.bases)) != len(self.bases):
            raise InvalidMatroid("repeated basis")
        if any(not 0 <= e < self.ground for b in self.bases for e in b):
            raise InvalidMatroid("element outside the ground set")
        if not exchange_axiom_holds(self.bases):
            raise InvalidMatroid("basis exchange axiom fails")
        object.__setattr__(
            self, "_lookup", {b: k for k, b in enumerate(self.bases)}
        )

    @classmethod
    def from_json(cls, data):
        """Create from explicit bases, or a uniform or graphic description.

        Accepted forms are ``{"ground": n, "bases": […]}``,
        ``{"type": "uniform", "r": 2, "n": 4}`` and
        ``{"type": "graphic", "graph": {"n": …, "edges": …}}``.

        """
        kind = data.get(JsonKey.Type.value)
        if kind == "uniform":
            return uniform_matroid(int(data["r"]), int(data["n"]))
        if kind == "graphic":
            from .cuts import Graph

            return graphic_matroid(Graph.from_json(data["graph"]))
        return cls(data[JsonKey.Ground.value], data[JsonKey.Bases.value])

    def to_json(self):
        """Return the JSON form."""
        return {
            JsonKey.Ground.value: self.ground,
            JsonKey.Bases.value: [list(b) for b in self.bases],
        }

    @property
    def rank(self):
        """Return the common size of the bases."""
        return len(self.bases[0])

    def is_basis(self, s):
        """Report whether the set `s` is a basis."""
        return tuple(sorted(s)) in self._lookup

    def position(self, b):
        """Return the variable index of a basis."""
        return self._lookup[tuple(sorted(b))]

    def indicator(self, b):
        """Return the 0/1 vector of a basis."""
        b = set(b)
        return tuple(int(e in b) for e in range(self.ground))

    def names(self):
        """Return the variable names ``a1 … aN``."""
        return ["a{}".format(k + 1) for k in range(len(self.bases))]


def is_valid(ground, bases):
    """Report whether `bases` define a matroid on `ground` elements."""
    try:
        Matroid(ground, bases)
    except InvalidMatroid:
        return False
    return True


def uniform_matroid(r, n):
    """Return ``U(r, n)`` with bases in lexicographic order."""
    if not 0 <= r <= n:
        raise InvalidMatroid("need 0 <= r <= n, got r={}, n={}".format(r, n))
    return Matroid(n, itt.combinations(range(n), r))


def spanning_tree_count(G):
    """Return the number of spanning trees by the matrix-tree theorem."""
    L = [[0] * G.n for _ in range(G.n)]
    for i, j in G.edges:
        L[i][i] += 1
        L[j][j] += 1
        L[i][j] -= 1
        L[j][i] -= 1
    reduced = [row[1:] for row in L[1:]]
    return determinant(reduced) if reduced else 1


def graphic_matroid(G, limit=EDGE_LIMIT):
    """Return the cycle matroid of a connected graph.

    Ground elements are edge indices; bases are spanning trees in
    lexicographic order, counted against the matrix-tree theorem.

    """
    if len(G.edges) > limit:
        raise TooLarge("graph edges", len(G.edges), limit)
    if not G.is_connected():
        raise Disconnected(str(G))

    bases = []
    for idx in itt.combinations(range(len(G.edges)), G.n - 1):
        g = nx.Graph()
        g.add_nodes_from(range(G.n))
        g.add_edges_from(G.edges[i] for i in idx)
        if nx.is_tree(g):
            bases.append(idx)

    expected = spanning_tree_count(G)
    if len(bases) != expected:
        raise InvalidMatroid(
            "found {} spanning trees, expected {}".format(len(bases), expected)
        )
    return Matroid(len(G.edges), bases)


# ## SYMMETRIC EXCHANGES ##


@attr.s(slots=True, frozen=True)
class BasisMultiset:
    """Multiset of bases, kept sorted."""

    bases = attr.ib(converter=lambda bs: tuple(sorted(_bases(bs))))

    @property
    def degree(self):
        """Return the number of bases."""
        return len(self.bases)

    def union(self, ground):
        """Return the multiplicity of each element over all bases."""
        counts = [0] * ground
        for b in self.bases:
            for e in b:
                counts[e] += 1
        return tuple(counts)

    def to_json(self):
        """Return the JSON form."""
        return [list(b) for b in self.bases]


def _exchanges(M, B1, B2):
    """Yield the pairs ``(B3, B4)`` of valid symmetric exchanges."""
    s1, s2 = set(B1), set(B2)
    for b1 in sorted(s1 - s2):
        for b2 in sorted(s2 - s1):
            B3 = tuple(sorted((s1 - {b1}) | {b2}))
            B4 = tuple(sorted((s2 - {b2}) | {b1}))
            if M.is_basis(B3) and M.is_basis(B4):
                yield B3, B4


def symmetric_exchange_moves(M, m):
    """Return the multisets one symmetric exchange away from `m`."""
    moves = set()
    for i, j in itt.combinations(range(m.degree), 2):
        B1, B2 = m.bases[i], m.bases[j]
        rest = m.bases[:i] + m.bases[i + 1:j] + m.bases[j + 1:]
        for B3, B4 in _exchanges(M, B1, B2):
            moved = BasisMultiset(rest + (B3, B4))
            if moved != m:
                moves.add(moved)
    return sorted(moves, key=lambda x: x.bases)


@attr.s(slots=True, frozen=True)
class WhiteReport:
    """Connectivity of the degree-``d`` fibers under exchanges."""

    degree = attr.ib()
    fibers = attr.ib()
    all_connected = attr.ib()

    #: A disconnected fiber, as its components, if any
    witness = attr.ib(default=None)

    def to_json(self):
        """Return the JSON form."""
        return {
            "degree": self.degree,
            "fibers": self.fibers,
            "all_connected": self.all_connected,
            "witness": None
            if self.witness is None
            else [[m.to_json() for m in comp] for comp in self.witness],
        }


def _components(M, fiber, budget):
    left = set(fiber)
    comps = []
    while left:
        start = min(left, key=lambda x: x.bases)
        comp = {start}
        queue = deque([start])
        while queue:
            cur = queue.popleft()
            budget.tick()
            for nb in symmetric_exchange_moves(M, cur):
                if nb.union(M.ground) != cur.union(M.ground):
                    raise InvalidMatroid("exchange changed the image")
                if nb not in comp:
                    comp.add(nb)
                    queue.append(nb)
        comps.append(sorted(comp, key=lambda x: x.bases))
        left -= comp
    return comps


def white_check(M, d, node_budget=10 ** 6):
    """Test that each degree-`d` fiber is connected by exchanges."""
    budget = Budget("fiber search nodes", node_budget)
    fibers = {}
    for combo in itt.combinations_with_replacement(M.bases, d):
        m = BasisMultiset(combo)
        fibers.setdefault(m.union(M.ground), []).append(m)

    for key in sorted(fibers):
        comps = _components(M, fibers[key], budget)
        if len(comps) > 1:
            logger.info("disconnected fiber over %s", key)
            return WhiteReport(d, len(fibers), False, comps)

    logger.debug("degree %d: %d fibers connected", d, len(fibers))
    return WhiteReport(d, len(fibers), True)


# ## BASE POLYTOPES ##


@attr.s(slots=True, frozen=True)
class BasePolytopeReport:
    """The base polytope and its normality."""

    polytope = attr.ib()
    normal = attr.ib()

    def to_json(self):
        """Return the JSON form."""
        return {
            "vertices": [list(v) for v in self.polytope.vertices],
            "normal": self.normal,
        }


def matroid_base_polytope(M, node_budget=10 ** 6):
    """Return the base polytope with the saturation of its cone monoid."""
    P = Polytope(M.ground, [M.indicator(b) for b in M.bases])
    normal = is_normal_configuration(P.vertices, node_budget)
    return BasePolytopeReport(P, normal)


def _affinely_independent(vs):
    return rank([v + (1,) for v in vs], len(vs[0]) + 1) == len(vs)


def icp_check(M, k, limit=ICP_LIMIT):
    """Check the integer Carathéodory property of ``k·P_M`` exhaustively.

    Every lattice point of ``k·P_M`` must be a sum of `k` vertices with
    affinely independent support.

    """
    verts = [M.indicator(b) for b in M.bases]
    count = len(verts) ** k
    if k > 3 or count > limit:
        raise TooLarge("vertex multisets", count, limit)

    good = set()
    for combo in itt.combinations_with_replacement(verts, k):
        if _affinely_independent(sorted(set(combo))):
            good.add(tuple(map(sum, zip(*combo))))

    P = Polytope(M.ground, verts)
    return all(x in good for x in lattice_points(P, k))


# ## IDEALS ##


def exchange_ideal(M, field=GF2):
    """Return ``J_M``, generated by the symmetric exchange binomials.

    One binomial ``y_{B1}·y_{B2} − y_{B3}·y_{B4}`` is kept per basis pair
    and valid exchange, up to sign; identically zero ones are dropped.

    """
    n = len(M.bases)
    seen = set()
    gens = []
    for i, j in itt.combinations(range(n), 2):
        for B3, B4 in _exchanges(M, M.bases[i], M.bases[j]):
            k, l = M.position(B3), M.position(B4)
            plus = [0] * n
            minus = [0] * n
            plus[i] += 1
            plus[j] += 1
            minus[k] += 1
            minus[l] += 1
            key = frozenset((tuple(plus), tuple(minus)))
            if plus == minus or key in seen:
                continue
            seen.add(key)
            gens.append(Polynomial.binomial(plus, minus, field))
    return Ideal(gens, n, field, M.names())


@attr.s(slots=True, frozen=True)
class FedderReport:
    """Outcome of Fedder's criterion for ``S/J_M`` over 𝔽₂."""

    is_f_pure = attr.ib()

    #: A generator of ``J^[2] : J`` outside ``m^[2]``
    witness = attr.ib()

    #: Whether a given polynomial lies in ``J^[2] : J`` modulo ``m^[2]``
    contains_f = attr.ib(default=None)

    #: Generators of ``J^[2] : J``, as strings
    colon_generators = attr.ib(default=(), converter=tuple)

    def to_json(self):
        """Return the JSON form."""
        return {
            "is_f_pure": self.is_f_pure,
            "witness": self.witness,
            "contains_f": self.contains_f,
            "colon": list(self.colon_generators),
        }


def _outside_frobenius_maximal(g):
    """Return the squarefree-in-each-variable part of `g`, if any."""
    keep = [(e, c) for e, c in g.terms if max(e, default=0) <= 1]
    return Polynomial(g.nvars, keep, g.field)


def fedder_check(M, f=None, budget=10 ** 6):
    """Test F-purity of ``S/J_M`` with Fedder's criterion over 𝔽₂.

    ``S/J_M`` is F-pure when ``J^[2] : J`` is not inside ``m^[2]``. When
    `f` (a :class:`Polynomial` or a string in ``a1 … aN``) is given, it
    is tested for membership in ``J^[2] : J + m^[2]``.

    """
    J = exchange_ideal(M, GF2)
    J = J.with_generators(J.groebner(budget=budget))
    C = colon(frobenius_power(J, 2), J, budget)

    witness = None
    for g in C.generators:
        part = _outside_frobenius_maximal(g)
        if not part.is_zero():
            witness = g.format(C.names)
            break

    contains = None
    if f is not None:
        if isinstance(f, str):
            f = Polynomial.parse(f, C.names, GF2)
        squares = [
            Polynomial.variable(C.nvars, i, GF2) ** 2 for i in range(C.nvars)
        ]
        contains = C.with_generators(C.generators + tuple(squares)).contains(
            f
        )

    logger.debug("Fedder colon has %d generators", len(C.generators))
    return FedderReport(witness is not None, witness, contains, C.format())


@attr.s(slots=True, frozen=True)
class MatroidIdealReport:
    """The toric ideal of a matroid with its generator degrees."""

    ideal = attr.ib()
    max_degree = attr.ib()
    within_bound = attr.ib()

    def to_json(self):
        """Return the JSON form."""
        return {
            "ideal": self.ideal.to_json(),
            "max_degree": self.max_degree,
            "within_bound": self.within_bound,
        }


def matroid_toric_ideal(M, field=QQ, budget=10 ** 6):
    """Return the toric ideal of the base polytope in ``a1 … aN``.

    Generators never need degree above the ground set size.

    """
    S = PointConfig(M.ground, [M.indicator(b) for b in M.bases])
    I = toric_ideal(S, field, names=M.names(), budget=budget)
    top = max((g.degree for g in I.generators), default=0)
    return MatroidIdealReport(I, top, top <= M.ground)
