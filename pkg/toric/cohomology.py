r"""*Simplicial homology and divisor cohomology for* ``toric``.

``toric`` Toric Objects: Rings, Ideals and Cones.

Two combinatorial formulas give the cohomology of ``O(D)`` on a toric
variety. The first sums, over characters ``m``, the reduced cohomology of
the complex of negative rays ``{u : ⟨m, u⟩ < −a_u}`` that span cones. The
second sums, over the divisors ``a`` linearly equivalent to ``D``, the
reduced homology of the complex of nonnegative rays. Both enumerate a
finite box of characters; :func:`box_stability_check` certifies the box.

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
from sympy.polys.domains import GF as SympyGF
from sympy.polys.domains import QQ as SympyQQ
from sympy.polys.matrices import DomainMatrix

from .enums import CohomologyMethod
from .errors import CohomologyMismatch, NotSimplicial
from .lattice import IntMatrix, rank, solve_rational
from .polynomials import QQ
from .utils import dot


logger = logging.getLogger(__name__)


# ## SIMPLICIAL COMPLEXES ##


def _facets(faces):
    faces = sorted({frozenset(f) for f in faces}, key=len, reverse=True)
    kept = []
    for f in faces:
        if not any(f <= g for g in kept):
            kept.append(f)
    return tuple(sorted((tuple(sorted(f)) for f in kept), key=len))


@attr.s(slots=True, frozen=True)
class SimplicialComplex:
    """Simplicial complex given by its facets.

    The empty face is always present, so a complex with no facets is
    ``{∅}``.

    """

    #: Facets as sorted vertex tuples; none contains another
    facets = attr.ib(converter=_facets)

    @property
    def vertices(self):
        """Return the sorted vertices."""
        return tuple(sorted({v for f in self.facets for v in f}))

    @property
    def dim(self):
        """Return the dimension (``-1`` for ``{∅}``)."""
        return max((len(f) for f in self.facets), default=0) - 1

    def faces(self, size):
        """Return the faces with `size` vertices, sorted."""
        if size <= 0:
            return [()] if size == 0 else []
        found = set()
        for f in self.facets:
            found.update(itt.combinations(f, size))
        return sorted(found)

    def to_json(self):
        """Return the JSON form."""
        return {"facets": [list(f) for f in self.facets]}


def induced_complex(cones, subset):
    """Return the complex of subsets of `subset` inside some cone."""
    subset = frozenset(subset)
    return SimplicialComplex(frozenset(c) & subset for c in cones)


# ## HOMOLOGY ##


def _domain(field):
    if field.characteristic == 0:
        return SympyQQ
    return SympyGF(field.characteristic)


def _boundary_rank(K, size, domain):
    """Rank of the boundary map from faces of `size` to `size − 1`."""
    cols = K.faces(size)
    rows = K.faces(size - 1)
    if not cols or not rows:
        return 0

    index = {f: i for i, f in enumerate(rows)}
    entries = [[0] * len(cols) for _ in rows]
    for j, f in enumerate(cols):
        for i in range(len(f)):
            entries[index[f[:i] + f[i + 1:]]][j] = (-1) ** i

    M = DomainMatrix.from_list_sympy(len(rows), len(cols), entries)
    return M.convert_to(domain).rank()


@attr.s(slots=True, frozen=True)
class HomologyProfile:
    """Reduced homology ranks from degree ``-1`` up to the dimension."""

    #: Ranks for degrees ``-1, 0, 1, …``
    ranks = attr.ib(converter=tuple)

    def __getitem__(self, degree):
        """Return the rank in `degree`, zero outside the stored range."""
        i = degree + 1
        return self.ranks[i] if 0 <= i < len(self.ranks) else 0

    def is_zero(self):
        """Report whether all ranks vanish."""
        return not any(self.ranks)

    def to_json(self):
        """Return ``{degree: rank}`` for the nonzero ranks."""
        return {j - 1: r for j, r in enumerate(self.ranks) if r}


def reduced_homology(K, field=QQ):
    """Return the reduced homology ranks of `K` over a field."""
    domain = _domain(field)
    top = K.dim + 1
    bd = [_boundary_rank(K, s, domain) for s in range(top + 2)]
    ranks = [
        len(K.faces(s)) - bd[s] - bd[s + 1] for s in range(top + 1)
    ]
    return HomologyProfile(ranks)


# ## ENUMERATION BOXES ##


def default_box(fan, D, pad=1):
    """Return the bounding box of the arrangement ``⟨m, u⟩ = −a_u``.

    The box spans every vertex of the arrangement, padded by `pad`.

    """
    n = fan.ambient_rank
    verts = []
    for idx in itt.combinations(range(fan.nrays), n):
        rows = [fan.rays[i] for i in idx]
        if rank(rows, n) == n:
            verts.append(
                solve_rational(rows, [-D.coefficients[i] for i in idx])
            )
    if not verts:
        return tuple((-pad, pad) for _ in range(n))
    return tuple(
        (
            floor(min(v[i] for v in verts)) - pad,
            ceil(max(v[i] for v in verts)) + pad,
        )
        for i in range(n)
    )


def enlarge(box, by=1):
    """Return `box` grown by `by` in every direction."""
    return tuple((lo - by, hi + by) for lo, hi in box)


def _characters(box):
    return itt.product(*[range(lo, hi + 1) for lo, hi in box])


# ## DIVISOR COHOMOLOGY ##


@attr.s(slots=True, frozen=True)
class CohomologyResult:
    """Dimensions ``H^0 … H^n`` with their nonzero contributions."""

    #: Dimension of ``H^p`` at index ``p``
    dims = attr.ib(converter=tuple)

    #: ``(m, profile)`` pairs that contributed
    contributions = attr.ib(converter=tuple, eq=False)

    #: The enumeration box
    box = attr.ib(converter=tuple)

    #: Formula used
    method = attr.ib(converter=CohomologyMethod)

    @property
    def euler_characteristic(self):
        """Return the alternating sum of the dimensions."""
        return euler_characteristic(self.dims)

    def to_json(self):
        """Return the JSON form."""
        return {
            "method": self.method.value,
            "dims": list(self.dims),
            "box": [list(b) for b in self.box],
            "euler_characteristic": self.euler_characteristic,
            "contributions": [
                {"m": list(m), "homology": p.to_json()}
                for m, p in self.contributions
            ],
        }


def euler_characteristic(dims):
    """Return ``Σ (−1)^p dim H^p``."""
    return sum((-1) ** p * d for p, d in enumerate(dims))


def _require_simplicial(fan):
    for c in fan.cones:
        if rank([fan.rays[i] for i in c], fan.ambient_rank) != len(c):
            raise NotSimplicial(list(c))


def _require_smooth(fan):
    fan.check_complete()
    for c in fan.cones:
        if abs(IntMatrix([fan.rays[i] for i in c]).determinant()) != 1:
            raise NotSimplicial(list(c), "cone is not smooth")


def cohomology_coh1(fan, D, box=None, field=QQ):
    """Compute ``H^p(O(D))`` from the complexes of negative rays.

    ``H^p`` in degree ``m`` is the reduced cohomology in degree ``p − 1``
    of the complex of cones spanned by ``{u : ⟨m, u⟩ < −a_u}``.

    """
    _require_simplicial(fan)
    n = fan.ambient_rank
    box = box or default_box(fan, D)
    a = D.coefficients

    dims = [0] * (n + 1)
    contributions = []
    cache = {}
    for m in _characters(box):
        neg = frozenset(
            i for i, u in enumerate(fan.rays) if dot(m, u) < -a[i]
        )
        if neg not in cache:
            cache[neg] = reduced_homology(
                induced_complex(fan.cones, neg), field
            )
        profile = cache[neg]
        if profile.is_zero():
            continue
        contributions.append((m, profile))
        for p in range(n + 1):
            dims[p] += profile[p - 1]

    logger.debug("coh1 over %s: %s", box, dims)
    return CohomologyResult(dims, contributions, box, CohomologyMethod.Coh1)


def cohomology_coh2(fan, D, box=None, field=QQ):
    """Compute ``H^j(O(D))`` from supports of equivalent divisors.

    Each ``a = D + div(m)`` contributes the reduced homology in degree
    ``n − 1 − j`` of the complex of cones on ``{u : a_u ≥ 0}``.

    """
    _require_smooth(fan)
    n = fan.ambient_rank
    box = box or default_box(fan, D)
    a0 = D.coefficients

    dims = [0] * (n + 1)
    contributions = []
    cache = {}
    for m in _characters(box):
        support = frozenset(
            i for i, u in enumerate(fan.rays) if a0[i] + dot(m, u) >= 0
        )
        if support not in cache:
            cache[support] = reduced_homology(
                induced_complex(fan.cones, support), field
            )
        profile = cache[support]
        if profile.is_zero():
            continue
        contributions.append((m, profile))
        for j in range(n + 1):
            dims[j] += profile[n - 1 - j]

    logger.debug("coh2 over %s: %s", box, dims)
    return CohomologyResult(dims, contributions, box, CohomologyMethod.Coh2)


_METHODS = {
    CohomologyMethod.Coh1: cohomology_coh1,
    CohomologyMethod.Coh2: cohomology_coh2,
}


def cohomology(fan, D, method=CohomologyMethod.Coh1, box=None, field=QQ):
    """Compute divisor cohomology by one formula, or both in agreement.

    With :attr:`CohomologyMethod.Both` the two results must agree, else
    :exc:`~toric.errors.CohomologyMismatch` is raised; the first formula's
    result is returned.

    """
    method = CohomologyMethod(method)
    if method is not CohomologyMethod.Both:
        return _METHODS[method](fan, D, box, field)

    first = cohomology_coh1(fan, D, box, field)
    second = cohomology_coh2(fan, D, box, field)
    if first.dims != second.dims:
        raise CohomologyMismatch(first.dims, second.dims)
    return first


def box_stability_check(method, fan, D, box=None, field=QQ):
    """Report whether enlarging `box` by one leaves every ``H^p`` unchanged."""
    box = box or default_box(fan, D)
    small = cohomology(fan, D, method, box, field).dims
    large = cohomology(fan, D, method, enlarge(box), field).dims
    if small != large:
        logger.warning(
            "box %s is too small: %s grows to %s", box, small, large
        )
    return small == large
