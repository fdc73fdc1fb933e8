r"""*Core package definition module for* ``toric``.

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


__all__ = [
    "IntMatrix",
    "AbelianGroupStructure",
    "Cone",
    "PointConfig",
    "Polytope",
    "Field",
    "TermOrder",
    "Polynomial",
    "Ideal",
    "Subdivision",
    "Fan",
    "WeilDivisor",
    "SimplicialComplex",
    "Graph",
    "Matroid",
    "FiniteAbelianGroup",
    "FlowTable",
    "RunConfig",
    "OrderKind",
    "OutputFormat",
    "CohomologyMethod",
    "QQ",
    "GF2",
    "toric_ideal",
    "hilbert_basis",
    "class_group",
    "cohomology",
    "regular_subdivision",
    "ToricError",
    "UsageError",
    "SpecError",
    "BudgetExceeded",
    "TooLarge",
]

from .cohomology import SimplicialComplex, cohomology
from .config import RunConfig
from .cuts import Graph
from .enums import CohomologyMethod, OrderKind, OutputFormat
from .errors import BudgetExceeded, SpecError, ToricError, TooLarge
from .errors import UsageError
from .fans import Fan, WeilDivisor, class_group
from .ideals import Ideal, toric_ideal
from .lattice import AbelianGroupStructure, IntMatrix
from .matroids import Matroid
from .phylo import FiniteAbelianGroup, FlowTable
from .polyhedra import Cone, PointConfig, Polytope, hilbert_basis
from .polynomials import GF2, QQ, Field, Polynomial, TermOrder
from .triangulations import Subdivision, regular_subdivision


__version__ = "0.1.dev1"
