r"""*Custom exceptions for* ``toric``.

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

"""


class ToricError(Exception):  # pragma: no cover
    """Superclass for all custom toric errors."""

    pass


class UsageError(ToricError):  # pragma: no cover
    """Raised for invalid command-line usage or arguments."""

    def __init__(self, msg=""):
        """Instantiate a ``UsageError``."""
        self.msg = msg

    def __str__(self):
        """Generate a more-informative error message."""
        return "Invalid usage: {}".format(self.msg)


class SpecError(ToricError):  # pragma: no cover
    """Raised when a textual spec (order, field, polynomial...) is invalid."""

    def __init__(self, kind, text):
        """Instantiate a ``SpecError``."""
        self.kind = kind
        self.text = text

    def __str__(self):
        """Generate a more-informative error message."""
        return "'{}' is an invalid {} spec".format(self.text, self.kind)


class BudgetExceeded(ToricError):  # pragma: no cover
    """Raised when a computation runs past its configured budget."""

    def __init__(self, what, limit):
        """Instantiate a ``BudgetExceeded``."""
        self.what = what
        self.limit = limit

    def __str__(self):
        """Generate a more-informative error message."""
        return "Budget exceeded: more than {} {}".format(self.limit, self.what)


class TooLarge(ToricError):  # pragma: no cover
    """Raised when an input is beyond the supported enumeration size."""

    def __init__(self, what, size, limit):
        """Instantiate a ``TooLarge``."""
        self.what = what
        self.size = size
        self.limit = limit

    def __str__(self):
        """Generate a more-informative error message."""
        return "{} of size {} exceeds the limit {}".format(
            self.what, self.size, self.limit
        )


class FieldMismatch(ToricError):  # pragma: no cover
    """Raised when polynomial data over different fields are combined."""

    def __init__(self, expected, found):
        """Instantiate a ``FieldMismatch``."""
        self.expected = expected
        self.found = found

    def __str__(self):
        """Generate a more-informative error message."""
        return "Expected coefficients in {}, found {}".format(
            self.expected, self.found
        )


class NotPointed(ToricError):  # pragma: no cover
    """Raised when a pointed cone is required but a line is contained."""

    def __init__(self, lineality):
        """Instantiate a ``NotPointed``."""
        self.lineality = lineality

    def __str__(self):
        """Generate a more-informative error message."""
        return "Cone is not pointed; lineality space spanned by {}".format(
            list(self.lineality)
        )


class NotFullDimensional(ToricError):  # pragma: no cover
    """Raised when a full-dimensional polytope or cone is required."""

    def __init__(self, dim, ambient_rank):
        """Instantiate a ``NotFullDimensional``."""
        self.dim = dim
        self.ambient_rank = ambient_rank

    def __str__(self):
        """Generate a more-informative error message."""
        return "Dimension {} is less than the ambient rank {}".format(
            self.dim, self.ambient_rank
        )


class InvalidPolytope(ToricError):  # pragma: no cover
    """Raised when listed vertices are not exactly the extreme points."""

    def __init__(self, point):
        """Instantiate an ``InvalidPolytope``."""
        self.point = point

    def __str__(self):
        """Generate a more-informative error message."""
        return "{} is not an extreme point of the listed vertices".format(
            self.point
        )


class InterpolationMismatch(ToricError):  # pragma: no cover
    """Raised when an Ehrhart interpolation fails its sanity count."""

    def __init__(self, k, expected, found):
        """Instantiate an ``InterpolationMismatch``."""
        self.k = k
        self.expected = expected
        self.found = found

    def __str__(self):
        """Generate a more-informative error message."""
        return "Interpolated count {} at k={} disagrees with {} points".format(
            self.expected, self.k, self.found
        )


class NonGenericWeight(ToricError):  # pragma: no cover
    """Raised when a weight vector induces a non-simplicial cell."""

    def __init__(self, weight, cell):
        """Instantiate a ``NonGenericWeight``."""
        self.weight = weight
        self.cell = cell

    def __str__(self):
        """Generate a more-informative error message."""
        return "Weight {} is not generic: cell {} is not a simplex".format(
            list(self.weight), sorted(self.cell)
        )


class NotAFace(ToricError):  # pragma: no cover
    """Raised when a generator subset is not a face of the cone."""

    def __init__(self, indices):
        """Instantiate a ``NotAFace``."""
        self.indices = indices

    def __str__(self):
        """Generate a more-informative error message."""
        return "Generators {} do not form a face".format(sorted(self.indices))


class RaysDoNotSpan(ToricError):  # pragma: no cover
    """Raised when the rays of a fan do not span the ambient space."""

    def __init__(self, rank, ambient_rank):
        """Instantiate a ``RaysDoNotSpan``."""
        self.rank = rank
        self.ambient_rank = ambient_rank

    def __str__(self):
        """Generate a more-informative error message."""
        return "Rays span rank {} inside rank {}".format(
            self.rank, self.ambient_rank
        )


class NotCartier(ToricError):  # pragma: no cover
    """Raised when a Weil divisor has no integral local data on a cone.

    The offending cone and the rational solution (or |None| when the
    local data on two cones disagree) are kept as a certificate.

    """

    def __init__(self, cone, solution=None):
        """Instantiate a ``NotCartier``."""
        self.cone = cone
        self.solution = solution

    def __str__(self):
        """Generate a more-informative error message."""
        if self.solution is None:
            return "Divisor is not Cartier on cone {}".format(
                sorted(self.cone)
            )
        return "Divisor is not Cartier on cone {}: m = ({})".format(
            sorted(self.cone), ", ".join(str(c) for c in self.solution)
        )


class NotComplete(ToricError):  # pragma: no cover
    """Raised when a complete fan is required."""

    def __init__(self, msg=""):
        """Instantiate a ``NotComplete``."""
        self.msg = msg

    def __str__(self):
        """Generate a more-informative error message."""
        return "Fan is not complete: {}".format(self.msg)


class NotSimplicial(ToricError):  # pragma: no cover
    """Raised when a simplicial (or smooth) fan is required."""

    def __init__(self, cone, msg="not simplicial"):
        """Instantiate a ``NotSimplicial``."""
        self.cone = cone
        self.msg = msg

    def __str__(self):
        """Generate a more-informative error message."""
        return "Cone {} is {}".format(sorted(self.cone), self.msg)


class Unbounded(ToricError):  # pragma: no cover
    """Raised when a divisor polytope is unbounded."""

    def __init__(self, recession):
        """Instantiate an ``Unbounded``."""
        self.recession = recession

    def __str__(self):
        """Generate a more-informative error message."""
        return "Polyhedron is unbounded along {}".format(list(self.recession))


class InvalidPartition(ToricError):  # pragma: no cover
    """Raised when a vertex partition is not a partition of the graph."""

    def __init__(self, a, b):
        """Instantiate an ``InvalidPartition``."""
        self.a = a
        self.b = b

    def __str__(self):
        """Generate a more-informative error message."""
        return "{}|{} is not a partition of the vertices".format(
            sorted(self.a), sorted(self.b)
        )


class NoDecomposition(ToricError):  # pragma: no cover
    """Raised when (3,2,...,2) is not a sum of three cut vectors."""

    def __init__(self, graph):
        """Instantiate a ``NoDecomposition``."""
        self.graph = graph

    def __str__(self):
        """Generate a more-informative error message."""
        return "No decomposition into three cuts for {}".format(self.graph)


class NotProper(ToricError):  # pragma: no cover
    """Raised when a computed coloring has a monochromatic edge."""

    def __init__(self, edge):
        """Instantiate a ``NotProper``."""
        self.edge = edge

    def __str__(self):
        """Generate a more-informative error message."""
        return "Coloring is not proper on edge {}".format(self.edge)


class NotHomogeneous(ToricError):  # pragma: no cover
    """Raised when an ideal expected to be homogeneous is not."""

    def __init__(self, generator):
        """Instantiate a ``NotHomogeneous``."""
        self.generator = generator

    def __str__(self):
        """Generate a more-informative error message."""
        return "Generator {} is not homogeneous".format(self.generator)


class Disconnected(ToricError):  # pragma: no cover
    """Raised when a connected graph is required."""

    def __init__(self, graph):
        """Instantiate a ``Disconnected``."""
        self.graph = graph

    def __str__(self):
        """Generate a more-informative error message."""
        return "Graph {} is not connected".format(self.graph)


class ShapeMismatch(ToricError):  # pragma: no cover
    """Raised when two tables cannot be compared."""

    def __init__(self, first, second):
        """Instantiate a ``ShapeMismatch``."""
        self.first = first
        self.second = second

    def __str__(self):
        """Generate a more-informative error message."""
        return "Table shapes {} and {} differ".format(self.first, self.second)


class InvalidMatroid(ToricError):  # pragma: no cover
    """Raised when a basis family violates the matroid axioms."""

    def __init__(self, msg=""):
        """Instantiate an ``InvalidMatroid``."""
        self.msg = msg

    def __str__(self):
        """Generate a more-informative error message."""
        return "Invalid matroid: {}".format(self.msg)


class CohomologyMismatch(ToricError):  # pragma: no cover
    """Raised when the two divisor cohomology formulas disagree."""

    def __init__(self, first, second):
        """Instantiate a ``CohomologyMismatch``."""
        self.first = first
        self.second = second

    def __str__(self):
        """Generate a more-informative error message."""
        return "Cohomology dimensions {} and {} disagree".format(
            list(self.first), list(self.second)
        )
