r"""*Group-based models on star trees for* ``toric``.

``toric`` Toric Objects: Rings, Ideals and Cones.

A flow is a sequence of ``n`` elements of a finite abelian group summing
to zero. Sending a flow ``(g₁, …, g_n)`` to ``Σ e_(i, g_i)`` gives the
vertices of the polytope ``P(G, n)``. A monomial in the flow variables is
a table whose rows are flows; two tables give a binomial of the toric
ideal exactly when their columns agree as multisets.

Tables are stored with their rows sorted, so equal multisets compare
equal.

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

import collections
import itertools as itt
import logging

import attr

from .errors import ShapeMismatch, ToricError, TooLarge
from .grammar import parse_group
from .ideals import toric_ideal
from .polyhedra import PointConfig
from .polynomials import QQ
from .utils import Budget


logger = logging.getLogger(__name__)

#: Largest number of flows enumerated
FLOW_LIMIT = 4096

#: Largest number of flows for a toric ideal
IDEAL_FLOW_LIMIT = 9


def _factors(value):
    if isinstance(value, str):
        return parse_group(value)
    factors = tuple(int(d) for d in value)
    if not factors or any(d < 2 for d in factors):
        raise ValueError("Invalid invariant factors {}".format(factors))
    return factors


@attr.s(slots=True, frozen=True)
class FiniteAbelianGroup:
    """Product of cyclic groups ``ℤ_{d₁} × … × ℤ_{d_k}``.

    Elements are tuples of residues; a bare |int| is accepted for a
    cyclic group.

    """

    #: Invariant factors
    factors = attr.ib(converter=_factors)

    @classmethod
    def parse(cls, text):
        """Create from a string such as ``Z2xZ2``."""
        return cls(text)

    @property
    def order(self):
        """Return the number of elements."""
        size = 1
        for d in self.factors:
            size *= d
        return size

    @property
    def zero(self):
        """Return the identity element."""
        return (0,) * len(self.factors)

    def elements(self):
        """Return all elements in lexicographic order."""
        return list(itt.product(*[range(d) for d in self.factors]))

    def element(self, g):
        """Coerce `g` to a reduced element tuple."""
        if isinstance(g, int):
            g = (g,)
        g = tuple(int(x) for x in g)
        if len(g) != len(self.factors):
            raise ValueError("{} is not an element of {}".format(g, self))
        return tuple(x % d for x, d in zip(g, self.factors))

    def add(self, g, h):
        """Return ``g + h``."""
        return tuple((x + y) % d for x, y, d in zip(g, h, self.factors))

    def neg(self, g):
        """Return ``−g``."""
        return tuple(-x % d for x, d in zip(g, self.factors))

    def total(self, elements):
        """Return the sum of `elements`."""
        acc = self.zero
        for g in elements:
            acc = self.add(acc, g)
        return acc

    def format(self, g):
        """Return `g` as an |int| for cyclic groups, else as a list."""
        return g[0] if len(self.factors) == 1 else list(g)

    def __str__(self):
        """Render as ``Z2xZ2``."""
        return "x".join("Z{}".format(d) for d in self.factors)


#: Preset groups by name
GROUPS = {
    name: FiniteAbelianGroup(name) for name in ("Z2", "Z3", "Z2xZ2", "Z4")
}


# ## FLOWS AND THE POLYTOPE ##


def _require_flows(G, n, limit):
    count = G.order ** max(n - 1, 0)
    if count > limit:
        raise TooLarge("flows", count, limit)


def is_flow(G, flow):
    """Report whether the elements of `flow` sum to zero."""
    return G.total(flow) == G.zero


def flows(G, n, limit=FLOW_LIMIT):
    """Return every flow of length `n`, in lexicographic order."""
    if n < 1:
        raise ValueError("Flows need n >= 1, got {}".format(n))
    _require_flows(G, n, limit)
    found = []
    for head in itt.product(G.elements(), repeat=n - 1):
        found.append(head + (G.neg(G.total(head)),))
    found.sort()
    logger.debug("%d flows for %s, n=%d", len(found), G, n)
    return found


def flow_vertex(G, flow):
    """Return ``Σ e_(i, g_i)`` with one block of size ``|G|`` per entry."""
    position = {g: k for k, g in enumerate(G.elements())}
    vertex = [0] * (len(flow) * G.order)
    for i, g in enumerate(flow):
        vertex[i * G.order + position[g]] = 1
    return tuple(vertex)


def polytope_PGn(G, n, limit=FLOW_LIMIT):
    """Return the vertices of ``P(G, n)``, one per flow."""
    return PointConfig(
        n * G.order, [flow_vertex(G, f) for f in flows(G, n, limit)]
    )


# ## TABLES ##


@attr.s(slots=True, frozen=True)
class FlowTable:
    """Multiset of flows, the rows of a table."""

    #: The group
    group = attr.ib()

    #: Rows as element tuples, sorted
    rows = attr.ib()

    def __attrs_post_init__(self):
        """Coerce the rows, check they are flows, then sort them."""
        rows = tuple(
            tuple(self.group.element(g) for g in r) for r in self.rows
        )
        if len({len(r) for r in rows}) > 1:
            raise ValueError("Rows of different lengths")
        for r in rows:
            if not is_flow(self.group, r):
                raise ValueError("{} is not a flow".format(r))
        object.__setattr__(self, "rows", tuple(sorted(rows)))

    @property
    def degree(self):
        """Return the number of rows."""
        return len(self.rows)

    @property
    def n(self):
        """Return the row length."""
        return len(self.rows[0]) if self.rows else 0

    def columns(self):
        """Return each column as a sorted tuple."""
        return tuple(
            tuple(sorted(r[i] for r in self.rows)) for i in range(self.n)
        )

    def phi_image(self):
        """Return the sum of the vertex vectors of the rows."""
        total = [0] * (self.n * self.group.order)
        for r in self.rows:
            for k, x in enumerate(flow_vertex(self.group, r)):
                total[k] += x
        return tuple(total)

    def to_json(self):
        """Return the rows as nested lists."""
        return [[self.group.format(g) for g in r] for r in self.rows]


def compatible(T0, T1):
    """Report whether the columns of two tables agree as multisets."""
    if (T0.degree, T0.n) != (T1.degree, T1.n) or T0.group != T1.group:
        raise ShapeMismatch((T0.degree, T0.n), (T1.degree, T1.n))
    return T0.columns() == T1.columns()


# ## MOVES ##


def _image(rows):
    n = len(rows[0])
    return tuple(tuple(sorted(r[i] for r in rows)) for i in range(n))


class _MoveSpace:
    """Flows of one length with their row-sets grouped by column image."""

    def __init__(self, G, n, limit=FLOW_LIMIT):
        """Enumerate the flows."""
        self.flows = flows(G, n, limit)
        self._fibers = {}

    def fiber(self, k):
        """Return ``image → [k-row sets]`` over all multisets of `k` flows."""
        if k not in self._fibers:
            found = collections.defaultdict(list)
            for rows in itt.combinations_with_replacement(self.flows, k):
                found[_image(rows)].append(rows)
            self._fibers[k] = found
        return self._fibers[k]

    def neighbours(self, table, d):
        """Yield tables one move of at most `d` rows away from `table`."""
        for k in range(2, min(d, len(table)) + 1):
            fiber = self.fiber(k)
            for sub in sorted(set(itt.combinations(table, k))):
                rest = list(table)
                for r in sub:
                    rest.remove(r)
                for rep in fiber[_image(sub)]:
                    if rep != sub:
                        yield tuple(sorted(rest + list(rep)))


def move_generate(T0, T1, d, node_budget=10 ** 6):
    """Connect two compatible tables by moves of at most `d` rows.

    A move replaces up to `d` rows by a compatible set of as many flows.
    Returns the tables along a shortest path from `T0` to `T1`, both
    included, or |None| when no such path exists.

    """
    if not compatible(T0, T1):
        raise ShapeMismatch(T0.columns(), T1.columns())
    if T0.rows == T1.rows:
        return [T0]

    space = _MoveSpace(T0.group, T0.n)
    budget = Budget("tables visited", node_budget)
    parent = {T0.rows: None}
    queue = collections.deque([T0.rows])
    while queue:
        table = queue.popleft()
        for nb in space.neighbours(table, d):
            if nb in parent:
                continue
            budget.tick()
            parent[nb] = table
            if nb == T1.rows:
                return _path(T0, parent, nb)
            queue.append(nb)

    logger.info("no %d-move path after %d tables", d, len(parent))
    return None


def _path(T0, parent, end):
    rows = []
    while end is not None:
        rows.append(end)
        end = parent[end]
    path = [FlowTable(T0.group, r) for r in reversed(rows)]
    for T in path:
        if not compatible(T0, T):
            raise ToricError("move left the fiber at {}".format(T.rows))
    return path


# ## COMPLEXITY ##


def _connected(space, tables, d, budget):
    tables = set(tables)
    start = next(iter(tables))
    seen = {start}
    queue = collections.deque([start])
    while queue:
        for nb in space.neighbours(queue.popleft(), d):
            if nb not in seen:
                budget.tick()
                seen.add(nb)
                queue.append(nb)
    return seen == tables


def _move_size(space, tables, budget):
    """Smallest move size connecting a fiber, 0 for a single table."""
    if len(tables) < 2:
        return 0
    degree = len(tables[0])
    for d in range(2, degree):
        if _connected(space, tables, d, budget):
            return d
    return degree


@attr.s(slots=True, frozen=True)
class ComplexityReport:
    """Move sizes needed to connect the fibers of each degree."""

    #: The group
    group = attr.ib()

    #: Number of leaves
    n = attr.ib()

    #: Largest table degree examined
    degree_max = attr.ib()

    #: Move size required at each degree
    profile = attr.ib(converter=lambda p: tuple(sorted(dict(p).items())))

    @property
    def phi_hat(self):
        """Return the largest move size required."""
        return max((s for _, s in self.profile), default=0)

    def to_json(self):
        """Return the JSON form."""
        return {
            "group": str(self.group),
            "n": self.n,
            "degree_max": self.degree_max,
            "phi_hat": self.phi_hat,
            "profile": {str(d): s for d, s in self.profile},
        }


def complexity_estimate(G, n, degree_max, node_budget=10 ** 6):
    """Return the move sizes needed to connect every fiber of tables.

    Tables of each degree ``2 … degree_max`` are grouped by their column
    multisets; a fiber needs move size ``s`` when moves of at most ``s``
    rows connect it but moves of ``s − 1`` rows do not.

    """
    space = _MoveSpace(G, n)
    budget = Budget("tables visited", node_budget)
    profile = {}
    for degree in range(2, degree_max + 1):
        fiber = space.fiber(degree)
        budget.tick(len(fiber))
        profile[degree] = max(
            (_move_size(space, tables, budget) for tables in fiber.values()),
            default=0,
        )
        logger.debug("%s n=%d degree %d: %d", G, n, degree, profile[degree])
    return ComplexityReport(G, n, degree_max, profile)


def phylo_toric_ideal(G, n, field=QQ, limit=IDEAL_FLOW_LIMIT):
    """Return the toric ideal of ``P(G, n)``; variables follow the flows."""
    _require_flows(G, n, limit)
    S = polytope_PGn(G, n, limit)
    names = ["q{}".format(k) for k in range(len(S.points))]
    return toric_ideal(S, field=field, names=names)


def _top_generator_degree(I):
    """Return the largest degree in a minimal generating set of `I`."""
    gens = sorted(I.generators, key=lambda g: g.degree)
    while gens:
        top = gens[-1].degree
        lower = [g for g in gens if g.degree < top]
        if not lower:
            return top
        J = I.with_generators(lower)
        if not all(J.contains(g) for g in gens if g.degree == top):
            return top
        gens = lower
    return 0


@attr.s(slots=True, frozen=True)
class DegreeCrossCheck:
    """Ideal generator degree against the move size of the same model."""

    #: Largest degree of a minimal generator of the toric ideal
    ideal_degree = attr.ib()

    #: Largest move size from :func:`complexity_estimate`
    phi_hat = attr.ib()

    @property
    def agree(self):
        """Report whether both computations give the same degree."""
        return self.ideal_degree == self.phi_hat

    def to_json(self):
        """Return the JSON form."""
        return {
            "ideal_degree": self.ideal_degree,
            "phi_hat": self.phi_hat,
            "agree": self.agree,
        }


def degree_cross_check(G, n, degree_max=3, field=QQ, node_budget=10 ** 6):
    """Compare the ideal of ``P(G, n)`` with the fibers of its tables.

    Meaningful when the ideal is generated in degree at most `degree_max`;
    the move search never looks past that degree.

    """
    ideal_degree = _top_generator_degree(phylo_toric_ideal(G, n, field))
    report = complexity_estimate(G, n, degree_max, node_budget)
    logger.debug(
        "%s n=%d: ideal degree %d, phi_hat %d",
        G,
        n,
        ideal_degree,
        report.phi_hat,
    )
    return DegreeCrossCheck(ideal_degree, report.phi_hat)
