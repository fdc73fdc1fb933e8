r"""*Ideals and Gröbner bases for* ``toric``.

``toric`` Toric Objects: Rings, Ideals and Cones.

Buchberger's algorithm with the Gebauer–Möller pair criteria, and the
constructions built on it: elimination, saturation, intersection, colon
ideals, Frobenius powers and toric ideals of point configurations.

Reduced Gröbner bases are monic and sorted by leading monomial, largest
first, so they are canonical for a given ideal and order.

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

import logging

import attr

from .enums import OrderKind
from .errors import FieldMismatch
from .lattice import IntMatrix, kernel_lattice
from .polyhedra import PointConfig
from .polynomials import (
    Field,
    GF2,
    GREVLEX,
    Polynomial,
    QQ,
    TermOrder,
    default_names,
)
from .utils import Budget


logger = logging.getLogger(__name__)

#: Default cap on the number of S-pairs treated by one Buchberger run
SPAIR_BUDGET = 10 ** 6


# ## MONOMIAL HELPERS ##


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _quo(a, b):
    return tuple(x - y for x, y in zip(a, b))


# ## DICT-LEVEL POLYNOMIAL ARITHMETIC ##
# Buchberger works on {exponent: coefficient} dicts for speed; basis
# elements are kept monic.


def _leading(p, key):
    return max(p, key=key)


def _sub_multiple(p, c, shift, g, field):
    """p -= c * x^shift * g, in place."""
    for e, gc in g.items():
        ne = _mul(e, shift)
        v = field.norm(p.get(ne, 0) - c * gc)
        if v == 0:
            p.pop(ne, None)
        else:
            p[ne] = v


def _monic(p, key, field):
    inv = field.inverse(p[_leading(p, key)])
    return {e: field.norm(c * inv) for e, c in p.items()}


def _reduce(p, basis, key, field):
    """Fully reduce `p` by monic `basis` (pairs of leading exponent, dict)."""
    p = dict(p)
    rem = {}
    while p:
        m = _leading(p, key)
        c = p[m]
        for lm, g in basis:
            if _divides(lm, m):
                _sub_multiple(p, c, _quo(m, lm), g, field)
                break
        else:
            rem[m] = c
            del p[m]
    return rem


def _spoly(f, g, key, field):
    a, b = _leading(f, key), _leading(g, key)
    l = _lcm(a, b)
    s = {}
    for e, c in f.items():
        s[_mul(e, _quo(l, a))] = c
    _sub_multiple(s, 1, _quo(l, b), g, field)
    return s


def _pair_priority(lcm, key):
    """Sort key selecting S-pairs by the normal strategy.

    Pairs with the smallest lcm degree come first, ties broken by the term
    order.

    """
    return (sum(lcm), key(lcm))


def _buchberger(polys, order, field, budget):
    """Return the reduced Gröbner basis of dict polynomials."""
    key = order.key

    # Inter-reduce the input until it is stable
    f1 = [_monic(p, key, field) for p in polys if p]
    while True:
        f = f1
        f1 = []
        for i, p in enumerate(f):
            r = _reduce(p, [(_leading(q, key), q) for q in f[:i]], key, field)
            if r:
                f1.append(_monic(r, key, field))
        if f == f1:
            break

    f = f1
    lms = [_leading(p, key) for p in f]

    def update(G, B, ih):
        mh = lms[ih]

        C = set(G)
        D = set()
        while C:
            ig = C.pop()
            mg = lms[ig]
            lcm_hg = _lcm(mh, mg)

            def lcm_divides(ip):
                return _divides(_lcm(mh, lms[ip]), lcm_hg)

            if _mul(mh, mg) == lcm_hg or (
                not any(lcm_divides(ipx) for ipx in C)
                and not any(lcm_divides(pr[1]) for pr in D)
            ):
                D.add((ih, ig))

        E = {
            (ih, ig)
            for ih, ig in D
            if _mul(mh, lms[ig]) != _lcm(mh, lms[ig])
        }

        B_new = set()
        for ig1, ig2 in B:
            lcm12 = _lcm(lms[ig1], lms[ig2])
            if (
                not _divides(mh, lcm12)
                or _lcm(lms[ig1], mh) == lcm12
                or _lcm(lms[ig2], mh) == lcm12
            ):
                B_new.add((ig1, ig2))
        B_new |= E

        G_new = {ig for ig in G if not _divides(mh, lms[ig])}
        G_new.add(ih)
        return G_new, B_new

    G, CP = set(), set()
    for ih in sorted(range(len(f)), key=lambda i: key(lms[i])):
        G, CP = update(G, CP, ih)

    zero = 0
    while CP:
        pair = min(
            CP,
            key=lambda pr: (
                _pair_priority(_lcm(lms[pr[0]], lms[pr[1]]), key),
                pr,
            ),
        )
        CP.remove(pair)
        budget.tick()

        s = _spoly(f[pair[0]], f[pair[1]], key, field)
        basis = [(lms[i], f[i]) for i in sorted(G, key=lambda i: key(lms[i]))]
        h = _reduce(s, basis, key, field)

        if h:
            f.append(_monic(h, key, field))
            lms.append(_leading(f[-1], key))
            G, CP = update(G, CP, len(f) - 1)
        else:
            zero += 1

    logger.debug(
        "buchberger: %d pairs, %d reduced to zero, basis size %d",
        budget.count,
        zero,
        len(G),
    )

    reduced = []
    for ig in G:
        others = [(lms[j], f[j]) for j in G if j != ig]
        r = _reduce(f[ig], others, key, field)
        if r:
            reduced.append(_monic(r, key, field))

    return sorted(reduced, key=lambda p: key(_leading(p, key)), reverse=True)


# ## IDEALS ##


def _generators(gens):
    return tuple(g for g in gens if not g.is_zero())


@attr.s(slots=True)
class Ideal:
    """Ideal of a polynomial ring, with cached reduced Gröbner bases."""

    #: Generators; zero polynomials are dropped
    generators = attr.ib(converter=_generators)

    #: Number of variables of the ring
    nvars = attr.ib(converter=int)

    #: Coefficient field
    field = attr.ib(default=QQ)

    #: Variable names used for display
    names = attr.ib(default=None)

    _cache = attr.ib(factory=dict, init=False, repr=False)

    def __attrs_post_init__(self):
        """Check generators against the ring and fill in names."""
        for g in self.generators:
            if g.field != self.field:
                raise FieldMismatch(str(self.field), str(g.field))
            if g.nvars != self.nvars:
                raise ValueError("Generator lives in a different ring")
        if self.names is None:
            self.names = default_names(self.nvars)
        self.names = tuple(self.names)

    @classmethod
    def parse(cls, texts, names, field=QQ):
        """Create from polynomial strings in the named variables."""
        return cls(
            [Polynomial.parse(t, names, field) for t in texts],
            len(names),
            field,
            names,
        )

    def groebner(self, order=GREVLEX, budget=SPAIR_BUDGET):
        """Return the reduced Gröbner basis for `order`."""
        if order not in self._cache:
            if isinstance(budget, int):
                budget = Budget("S-pairs", budget)
            dicts = _buchberger(
                [g.as_dict() for g in self.generators],
                order,
                self.field,
                budget,
            )
            self._cache[order] = tuple(
                Polynomial.from_dict(self.nvars, d, self.field) for d in dicts
            )
        return self._cache[order]

    def normal_form(self, f, order=GREVLEX):
        """Return the remainder of `f` modulo the Gröbner basis."""
        if f.field != self.field:
            raise FieldMismatch(str(self.field), str(f.field))
        basis = [
            (g.leading_monomial(order), g.as_dict())
            for g in self.groebner(order)
        ]
        r = _reduce(f.as_dict(), basis, order.key, self.field)
        return Polynomial.from_dict(self.nvars, r, self.field)

    def contains(self, f, order=GREVLEX):
        """Report whether `f` lies in the ideal."""
        return self.normal_form(f, order).is_zero()

    def is_subset(self, other, order=GREVLEX):
        """Report whether this ideal is contained in `other`."""
        return all(other.contains(g, order) for g in self.generators)

    def equals(self, other, order=GREVLEX):
        """Report whether two ideals of the same ring coincide."""
        return self.groebner(order) == other.groebner(order)

    def is_zero(self):
        """Report whether the ideal is (0)."""
        return not self.generators

    def is_unit(self, order=GREVLEX):
        """Report whether the ideal is the whole ring."""
        gb = self.groebner(order)
        return len(gb) == 1 and gb[0].degree == 0

    def with_generators(self, gens):
        """Return an ideal of the same ring with other generators."""
        return Ideal(gens, self.nvars, self.field, self.names)

    def format(self, order=GREVLEX):
        """Render the generators as strings."""
        return [g.format(self.names, order) for g in self.generators]

    def to_json(self, order=GREVLEX):
        """Return the JSON form with generator strings and terms."""
        return {
            "field": str(self.field),
            "variables": list(self.names),
            "generators": self.format(order),
            "terms": [g.to_json() for g in self.generators],
        }


def buchberger(I, order=GREVLEX, budget=SPAIR_BUDGET):
    """Return the reduced Gröbner basis of `I` for `order`."""
    return list(I.groebner(order, budget))


def normal_form(f, I, order=GREVLEX):
    """Return the normal form of `f` modulo `I`."""
    return I.normal_form(f, order)


def initial_ideal(I, order=GREVLEX, budget=SPAIR_BUDGET):
    """Return the initial ideal of `I`.

    `order` is a :class:`TermOrder` (giving the monomial ideal of leading
    terms) or a bare weight vector, in which case the weight initial forms
    of the Gröbner basis for that weight refined by graded reverse
    lexicographic order are returned.

    """
    if isinstance(order, TermOrder):
        gb = I.groebner(order, budget)
        return I.with_generators(
            [
                Polynomial.monomial(g.leading_monomial(order), 1, I.field)
                for g in gb
            ]
        )

    weights = tuple(int(w) for w in order)
    gb = I.groebner(TermOrder.weight(weights), budget)
    return I.with_generators([g.initial_form(weights) for g in gb])


def _elimination_order(nvars, drop):
    return TermOrder.weight(
        [int(i in drop) for i in range(nvars)], OrderKind.GrevLex
    )


def eliminate(I, drop_vars, budget=SPAIR_BUDGET):
    """Return ``I ∩ k[kept variables]`` as an ideal of the smaller ring."""
    drop = frozenset(drop_vars)
    keep = [i for i in range(I.nvars) if i not in drop]

    gb = I.groebner(_elimination_order(I.nvars, drop), budget)
    gens = [g.project(keep) for g in gb if not (g.support() & drop)]
    return Ideal(gens, len(keep), I.field, [I.names[i] for i in keep])


def _extend(I, tag="_t"):
    return Ideal(
        [g.extend() for g in I.generators],
        I.nvars + 1,
        I.field,
        I.names + (tag,),
    )


def saturate(I, f, budget=SPAIR_BUDGET):
    """Return ``I : f^∞`` via a tag variable ``t`` and ``t·f − 1``."""
    J = _extend(I)
    t = Polynomial.variable(J.nvars, I.nvars, I.field)
    one = Polynomial.constant(J.nvars, 1, I.field)
    J = J.with_generators(J.generators + (t * f.extend() - one,))
    return _restore_names(eliminate(J, [I.nvars], budget), I)


def _restore_names(J, I):
    return Ideal(J.generators, I.nvars, I.field, I.names)


def intersect(I, J, budget=SPAIR_BUDGET):
    """Return ``I ∩ J`` via ``t·I + (1 − t)·J``."""
    if I.field != J.field:
        raise FieldMismatch(str(I.field), str(J.field))

    K = _extend(I)
    t = Polynomial.variable(K.nvars, I.nvars, I.field)
    one = Polynomial.constant(K.nvars, 1, I.field)
    gens = [t * g.extend() for g in I.generators]
    gens += [(one - t) * g.extend() for g in J.generators]
    K = eliminate(K.with_generators(gens), [I.nvars], budget)
    return _restore_names(K, I)


def exact_quotient(f, g, order=GREVLEX):
    """Return ``f / g``, raising :exc:`ValueError` if `g` does not divide."""
    q = {}
    r = f.as_dict()
    lm, lc = g.leading_term(order)
    inv = g.field.inverse(lc)
    while r:
        m = _leading(r, order.key)
        if not _divides(lm, m):
            raise ValueError("Polynomial is not an exact multiple")
        c = g.field.norm(r[m] * inv)
        shift = _quo(m, lm)
        q[shift] = c
        _sub_multiple(r, c, shift, g.as_dict(), g.field)
    return Polynomial.from_dict(f.nvars, q, f.field)


def colon(I, J, budget=SPAIR_BUDGET):
    """Return ``I : J = {g : g·J ⊆ I}``.

    Each single colon ``I : h`` is ``(I ∩ (h)) / h``; these are intersected
    over the generators of `J`. The colon by the zero ideal is the unit
    ideal.

    """
    if I.field != J.field:
        raise FieldMismatch(str(I.field), str(J.field))

    result = None
    for h in J.generators:
        K = intersect(I, I.with_generators([h]), budget)
        quot = I.with_generators(
            [exact_quotient(k, h) for k in K.groebner(GREVLEX, budget)]
        )
        result = quot if result is None else intersect(result, quot, budget)
        logger.debug("colon: %d generators so far", len(result.generators))

    if result is None:
        return I.with_generators([Polynomial.constant(I.nvars, 1, I.field)])

    return result.with_generators(result.groebner(GREVLEX, budget))


def frobenius_power(I, p):
    """Return ``I^[p]``, generated by the p-th powers of the generators."""
    if I.field.characteristic != p:
        raise FieldMismatch(str(Field(p)), str(I.field))
    return I.with_generators([g.frobenius() for g in I.generators])


# ## TORIC IDEALS ##


def lattice_binomials(vectors, field=QQ):
    """Return the binomials ``x^{u⁺} − x^{u⁻}`` for lattice vectors `u`."""
    return [
        Polynomial.binomial(
            [max(a, 0) for a in u], [max(-a, 0) for a in u], field
        )
        for u in vectors
    ]


def toric_ideal(
    S,
    field=QQ,
    homogenize=False,
    order=GREVLEX,
    names=None,
    budget=SPAIR_BUDGET,
):
    """Return the toric ideal of a point configuration.

    Variables follow the order of the points. The lattice ideal of the
    kernel of the point matrix is saturated by every variable in turn;
    the generators returned are the reduced Gröbner basis for `order`.

    """
    if not isinstance(S, PointConfig):
        S = PointConfig.from_json(S)
    if homogenize:
        S = S.homogenize()

    m = len(S)
    A = IntMatrix(S.points, ncols=S.ambient_rank).transpose()
    kernel = kernel_lattice(A)
    logger.debug("toric ideal: %d points, kernel rank %d", m, kernel.rank)

    I = Ideal(lattice_binomials(kernel.vectors, field), m, field, names)
    for i in range(m):
        if I.is_zero():
            break
        I = saturate(I, Polynomial.variable(m, i, field), budget)

    return I.with_generators(I.groebner(order, budget))


def same_generators_over_fields(S, budget=SPAIR_BUDGET):
    """Report whether the rational toric generators also work over 𝔽₂.

    The generators computed over ℚ, read modulo 2, must generate the toric
    ideal computed natively over 𝔽₂.

    """
    over_q = toric_ideal(S, QQ, budget=budget)
    over_2 = toric_ideal(S, GF2, budget=budget)
    read = over_2.with_generators(
        [g.change_field(GF2) for g in over_q.generators]
    )
    return read.is_subset(over_2) and over_2.is_subset(read)
