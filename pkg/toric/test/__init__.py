r"""*Test suite for* ``toric``.

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

__all__ = [
    "SEED",
    "suite_lattice",
    "suite_polyhedra",
    "suite_ideals",
    "suite_triangulations",
    "suite_fans",
    "suite_cohomology",
    "suite_cuts",
    "suite_matroids",
    "suite_phylo",
    "suite_cli",
    "suite_slow",
    "suite_doctest_readme",
]

#: Seed for the randomized property suites
SEED = 20261018

from .toric_cli import suite_cli
from .toric_cohomology import suite_cohomology
from .toric_cuts import suite_cuts
from .toric_fans import suite_fans
from .toric_ideals import suite_ideals
from .toric_lattice import suite_lattice
from .toric_matroids import suite_matroids
from .toric_phylo import suite_phylo
from .toric_polyhedra import suite_polyhedra
from .toric_readme import suite_doctest_readme
from .toric_slow import suite_slow
from .toric_triangulations import suite_triangulations
