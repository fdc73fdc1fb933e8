r"""``Enums`` *for* ``toric``.

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

from enum import Enum


class OrderKind(str, Enum):
    """Enumeration for the supported monomial term orders."""

    #: Pure lexicographic order, first variable largest
    Lex = "lex"

    #: Total degree, ties broken lexicographically
    GrLex = "grlex"

    #: Total degree, ties broken by reverse lexicographic order
    GrevLex = "grevlex"

    #: Weight vector, ties broken by one of the other orders
    Weight = "weight"


class FieldKind(str, Enum):
    """Enumeration for the supported coefficient fields."""

    #: The rational numbers
    Rational = "QQ"

    #: A prime field of small characteristic
    Finite = "GF"


class OutputFormat(str, Enum):
    """Enumeration for command-line output formats."""

    #: Machine-readable JSON with numbers as strings
    Json = "json"

    #: Human-readable ``key: value`` summary
    Text = "text"


class CohomologyMethod(str, Enum):
    """Enumeration for the divisor cohomology formulas."""

    #: Reduced cohomology of the negative-ray complexes, per character
    Coh1 = "coh1"

    #: Reduced homology of supports, per divisor in the class
    Coh2 = "coh2"

    #: Run both and require agreement
    Both = "both"


class JsonKey(str, Enum):
    """Enumeration for keys of the JSON input formats."""

    #: Ambient lattice rank of a point configuration
    AmbientRank = "ambient_rank"

    #: Point list of a configuration or polytope
    Points = "points"

    #: Ray list of a fan
    Rays = "rays"

    #: Maximal cones of a fan, as ray-index lists
    Cones = "cones"

    #: Completeness flag of a fan
    Complete = "complete"

    #: Vertex count of a graph
    VertexCount = "n"

    #: Edge list of a graph
    Edges = "edges"

    #: Ground set size of a matroid
    Ground = "ground"

    #: Basis list of a matroid
    Bases = "bases"

    #: Matroid constructor selector
    Type = "type"
