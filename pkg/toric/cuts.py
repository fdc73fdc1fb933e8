r"""*Cut polytopes of graphs for* ``toric``.

``toric`` Toric Objects: Rings, Ideals and Cones.

A partition ``A|B`` of the vertices of a graph gives the cut vector
``(1, x_e)`` with ``x_e = 1`` exactly on the edges joining ``A`` to
``B``. Partitions are canonical when vertex 0 lies in ``A``, and are
ordered by the bitmask of ``B``, so the empty cut comes first.

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
import networkx as nx

from .enums import JsonKey
from .errors import (
    BudgetExceeded,
    Disconnected,
    InvalidPartition,
    NoDecomposition,
    NotHomogeneous,
    NotProper,
    TooLarge,
)
from .ideals import toric_ideal
from .lattice import integer_combination
from .polyhedra import PointConfig, saturation_report


logger = logging.getLogger(__name__)

#: Largest vertex count for cut enumeration
VERTEX_LIMIT = 10

#: Largest vertex count for the decomposition search
DECOMPOSE_LIMIT = 9

#: Largest vertex count for cut toric ideals
IDEAL_LIMIT = 4

#: Largest edge count for facet enumeration
EDGE_LIMIT = 24


def _edges(edges):
    return tuple(tuple(sorted(int(v) for v in e)) for e in edges)


@attr.s(slots=True, frozen=True)
class Graph:
    """Simple graph on vertices ``0 … n−1`` with an ordered edge list."""

    #: Number of vertices
    n = attr.ib(converter=int)

    #: Edges as sorted vertex pairs, in coordinate order
    edges = attr.ib(converter=_edges)

    def __attrs_post_init__(self):
        """Reject loops, repeated edges and unknown vertices."""
        for i, j in self.edges:
            if i == j or not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError("Invalid edge {}".format((i, j)))
        if len(set(self.edges)) != len(self.edges):
            raise ValueError("Repeated edge")

    @classmethod
    def from_json(cls, data):
        """Create from ``{"n": 4, "edges": [[0, 1], …]}``."""
        return cls(data[JsonKey.VertexCount.value], data[JsonKey.Edges.value])

    def to_json(self):
        """Return the JSON form."""
        return {
            JsonKey.VertexCount.value: self.n,
            JsonKey.Edges.value: [list(e) for e in self.edges],
        }

    def to_networkx(self):
        """Return a :class:`networkx.Graph` copy."""
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    def is_connected(self):
        """Report whether the graph is connected."""
        return self.n > 0 and nx.is_connected(self.to_networkx())

    def __str__(self):
        """Render as ``n=…, edges=…``."""
        return "n={}, edges={}".format(self.n, [list(e) for e in self.edges])


def complete_graph(n):
    """Return ``K_n``."""
    return Graph(n, itt.combinations(range(n), 2))


def path_graph(n):
    """Return the path on `n` vertices."""
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    """Return the cycle on `n` vertices."""
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def _require(G, limit, what="graph vertices"):
    if G.n > limit:
        raise TooLarge(what, G.n, limit)


def _require_connected(G):
    if not G.is_connected():
        raise Disconnected(str(G))


# ## CUT VECTORS ##


def canonical_partitions(G):
    """Yield every partition ``A|B`` with ``0 ∈ A``, ordered by ``B``."""
    for mask in range(2 ** (G.n - 1)):
        B = frozenset(v for v in range(1, G.n) if mask >> (v - 1) & 1)
        yield frozenset(range(G.n)) - B, B


def cut_vector(G, A, B):
    """Return ``(1, x_e)`` for the cut of the partition ``A|B``."""
    A, B = frozenset(A), frozenset(B)
    if A & B or A | B != frozenset(range(G.n)):
        raise InvalidPartition(A, B)
    return (1,) + tuple(int((i in A) != (j in A)) for i, j in G.edges)


def cut_polytope_points(G, limit=VERTEX_LIMIT):
    """Return the cut vectors of a connected graph, one per partition."""
    _require(G, limit)
    _require_connected(G)
    return PointConfig(
        len(G.edges) + 1,
        [cut_vector(G, A, B) for A, B in canonical_partitions(G)],
    )


# ## FACETS ##


def _in_triangle(G):
    g = G.to_networkx()
    return {
        e
        for e in G.edges
        if set(g[e[0]]) & set(g[e[1]])
    }


def chordless_cycles(G):
    """Return the chordless cycles of length ≥ 3 as edge-index tuples."""
    index = {e: k for k, e in enumerate(G.edges)}
    cycles = set()
    for cyc in nx.chordless_cycles(G.to_networkx()):
        if len(cyc) < 3:
            continue
        ring = zip(cyc, cyc[1:] + cyc[:1])
        cycles.add(tuple(sorted(index[tuple(sorted(e))] for e in ring)))
    return sorted(cycles)


def seymour_inequalities(G, limit=EDGE_LIMIT):
    """Return covectors ``c`` with ``⟨c, x⟩ ≥ 0`` on the cut cone of `G`.

    The families are the edge bounds ``0 ≤ x_e ≤ x₀`` for edges in no
    triangle and, for each chordless cycle ``C`` and odd ``F ⊆ C``,
    ``Σ_F x_e ≤ (|F| − 1)·x₀ + Σ_{C∖F} x_e``. They describe the cone
    completely only for graphs without a ``K₅`` minor.

    """
    if len(G.edges) > limit:
        raise TooLarge("graph edges", len(G.edges), limit)

    m = len(G.edges)
    found = set()
    tri = _in_triangle(G)
    for k, e in enumerate(G.edges):
        if e in tri:
            continue
        lower = [0] * (m + 1)
        lower[k + 1] = 1
        upper = [0] * (m + 1)
        upper[0], upper[k + 1] = 1, -1
        found.update((tuple(lower), tuple(upper)))

    for cyc in chordless_cycles(G):
        for size in range(1, len(cyc) + 1, 2):
            for F in itt.combinations(cyc, size):
                c = [0] * (m + 1)
                c[0] = size - 1
                for k in cyc:
                    c[k + 1] = -1 if k in F else 1
                found.add(tuple(c))

    logger.debug("%d Seymour inequalities for %s", len(found), G)
    return sorted(found)


# ## DECOMPOSITIONS AND COLORINGS ##


def target_point(G):
    """Return ``(3, 2, …, 2)``."""
    return (3,) + (2,) * len(G.edges)


def decompose_targets(G, limit=DECOMPOSE_LIMIT):
    """Return three partitions whose cut vectors sum to ``(3, 2, …, 2)``.

    The lexicographically least index triple in canonical order is
    returned, or |None| when there is none.

    """
    _require(G, limit)
    parts = list(canonical_partitions(G))
    vecs = [cut_vector(G, A, B) for A, B in parts]
    where = {}
    for k, v in enumerate(vecs):
        where.setdefault(v, []).append(k)
    target = target_point(G)

    for i in range(len(vecs)):
        for j in range(i, len(vecs)):
            rest = tuple(
                t - a - b for t, a, b in zip(target, vecs[i], vecs[j])
            )
            hits = [k for k in where.get(rest, ()) if k >= j]
            if hits:
                logger.debug("decomposition %s", (i, j, hits[0]))
                return parts[i], parts[j], parts[hits[0]]
    return None


def _color(v, parts):
    flip = v not in parts[0][0]
    pattern = tuple((v in A) != flip for A, _ in parts[1:])
    return {
        (True, True): 1,
        (False, False): 2,
        (False, True): 3,
        (True, False): 4,
    }[pattern]


def four_coloring(G, limit=DECOMPOSE_LIMIT):
    """Return a proper coloring ``vertex → {1, 2, 3, 4}``.

    The colors are the classes ``(A₁∩A₂∩A₃) ∪ (B₁∩B₂∩B₃)`` and the three
    classes like it, read off a decomposition of ``(3, 2, …, 2)``.

    """
    parts = decompose_targets(G, limit)
    if parts is None:
        raise NoDecomposition(str(G))

    coloring = {v: _color(v, parts) for v in range(G.n)}
    for i, j in G.edges:
        if coloring[i] == coloring[j]:
            raise NotProper((i, j))
    return coloring


def is_proper(G, coloring):
    """Report whether no edge is monochromatic."""
    return all(coloring[i] != coloring[j] for i, j in G.edges)


# ## LATTICE AND IDEAL ##


def cut_lattice_certificate(G, limit=VERTEX_LIMIT):
    """Return integer coefficients writing ``(3, 2, …, 2)`` in cut vectors.

    Coefficients follow the canonical partition order; |None| means the
    point is outside the lattice.

    """
    S = cut_polytope_points(G, limit)
    return integer_combination(S.points, target_point(G))


def cut_toric_ideal(G, limit=IDEAL_LIMIT):
    """Return the toric ideal of the cut map ``q_{A|B} ↦ Π s_e Π t_e``.

    ``s_e`` marks a cut edge and ``t_e`` an uncut one; variables follow
    the canonical partition order.

    """
    _require(G, limit)
    _require_connected(G)
    m = len(G.edges)
    points = []
    for A, B in canonical_partitions(G):
        x = cut_vector(G, A, B)[1:]
        points.append(x + tuple(1 - a for a in x))
    names = ["q{}".format(k) for k in range(len(points))]
    I = toric_ideal(PointConfig(2 * m, points), names=names)

    # Every point has coordinate sum m
    for g in I.generators:
        if not g.is_homogeneous():
            raise NotHomogeneous(g)
    return I


@attr.s(slots=True, frozen=True)
class NormalityEvidence:
    """Outcome of a saturation test on a cut configuration."""

    #: The graph
    graph = attr.ib()

    #: Saturation outcome, |None| when the budget ran out
    saturated = attr.ib()

    #: Missing Hilbert basis elements, if any
    missing = attr.ib(converter=tuple, default=())

    def to_json(self):
        """Return the JSON form."""
        return {
            "graph": self.graph.to_json(),
            "saturated": self.saturated,
            "missing": [list(h) for h in self.missing],
        }


def normality_evidence(G, node_budget=10 ** 6, limit=VERTEX_LIMIT):
    """Test whether the cut monoid of `G` is saturated, within a budget."""
    S = cut_polytope_points(G, limit)
    try:
        report = saturation_report(S, node_budget)
    except BudgetExceeded as e:
        logger.warning("normality of cuts of %s undecided: %s", G, e)
        return NormalityEvidence(G, None)
    return NormalityEvidence(G, report.saturated, report.missing)
