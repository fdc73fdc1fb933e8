r"""*Mini-language grammars for* ``toric``.

``toric`` Toric Objects: Rings, Ideals and Cones.

The textual specs accepted across the package (term orders, coefficient
fields, abelian groups, enumeration boxes, integer vectors and
polynomials) are all parsed here with ``pyparsing``. Every parse failure
is re-raised as :exc:`~toric.errors.SpecError`.

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

from fractions import Fraction

import pyparsing as pp

from .enums import FieldKind, OrderKind
from .errors import SpecError


# ## NUMBERS ##
_pp_int = pp.Regex(r"[+-]?\d+").setParseAction(lambda t: int(t[0]))
_pp_nat = pp.Regex(r"\d+").setParseAction(lambda t: int(t[0]))
_pp_int_list = pp.delimitedList(_pp_int)
_pp_vector = pp.StringStart() + _pp_int_list + pp.StringEnd()

# ## TERM ORDERS ##
# Named orders; weight orders carry their vector and an optional tiebreak
_pp_named_order = pp.oneOf(
    [k.value for k in OrderKind if k is not OrderKind.Weight]
)
_pp_weight_order = (
    pp.Suppress(pp.Literal(OrderKind.Weight.value))
    + pp.Suppress("(")
    + pp.Group(_pp_int_list).setResultsName("weights")
    + pp.Optional(
        pp.Suppress(";") + _pp_named_order.copy().setResultsName("tiebreak")
    )
    + pp.Suppress(")")
)
_pp_order = (
    pp.StringStart()
    + (_pp_weight_order | _pp_named_order.copy().setResultsName("kind"))
    + pp.StringEnd()
)

# ## FIELDS ##
_pp_field = (
    pp.StringStart()
    + (
        pp.Literal(FieldKind.Rational.value).setResultsName("rational")
        | (
            pp.Suppress(pp.Literal(FieldKind.Finite.value))
            + pp.Suppress("(")
            + _pp_nat.copy().setResultsName("p")
            + pp.Suppress(")")
        )
    )
    + pp.StringEnd()
)

# ## FINITE ABELIAN GROUPS ##
# Products of cyclic groups, e.g. Z2xZ2
_pp_cyclic = pp.Suppress(pp.CaselessLiteral("Z")) + _pp_nat
_pp_group = (
    pp.StringStart()
    + pp.delimitedList(_pp_cyclic, delim=pp.CaselessLiteral("x"))
    + pp.StringEnd()
)

# ## ENUMERATION BOXES ##
# Either a symmetric radius (6, ±6, +-6) or per-coordinate ranges lo..hi
_pp_radius = pp.Optional(
    pp.Suppress(pp.Literal("±") | pp.Literal("+-"))
) + _pp_nat.copy().setResultsName("radius")
_pp_range = pp.Group(_pp_int + pp.Suppress("..") + _pp_int)
_pp_box = (
    pp.StringStart()
    + (
        pp.Group(pp.delimitedList(_pp_range)).setResultsName("ranges")
        | _pp_radius
    )
    + pp.StringEnd()
)

# ## POLYNOMIALS ##
_pp_var = pp.Word(pp.alphas, pp.alphanums + "_")
_pp_exp = pp.Suppress(pp.Literal("**") | pp.Literal("^")) + _pp_nat
_pp_coeff = pp.Regex(r"\d+(/\d+)?")
_pp_factor = pp.Group(_pp_var + pp.Optional(_pp_exp, default=1)) | _pp_coeff
_pp_product = pp.Group(
    _pp_factor + pp.ZeroOrMore(pp.Suppress("*") + _pp_factor)
)
_pp_sign = pp.oneOf("+ -")
_pp_polynomial = (
    pp.StringStart()
    + pp.Optional(_pp_sign, default="+")
    + _pp_product
    + pp.ZeroOrMore(_pp_sign + _pp_product)
    + pp.StringEnd()
)


def _parse(pattern, kind, text):
    """Run `pattern` on `text`, wrapping parse failures."""
    try:
        return pattern.parseString(text.strip())
    except pp.ParseException as e:
        raise SpecError(kind, text) from e


def parse_int_list(text):
    """Parse a comma-separated integer vector such as ``-3,-5,0,0``."""
    return [int(v) for v in _parse(_pp_vector, "vector", text)]


def parse_order(text):
    """Parse a term-order spec.

    Returns a |tuple| ``(kind, weights, tiebreak)``, where `weights` and
    `tiebreak` are |None| for the named orders.

    """
    pr = _parse(_pp_order, "term order", text)

    if "weights" in pr:
        tiebreak = pr.get("tiebreak", OrderKind.GrevLex.value)
        return (
            OrderKind.Weight,
            tuple(int(w) for w in pr["weights"]),
            OrderKind(tiebreak),
        )

    return OrderKind(pr["kind"]), None, None


def parse_field(text):
    """Parse ``QQ`` or ``GF(p)``; return the characteristic (0 for ``QQ``)."""
    pr = _parse(_pp_field, "field", text)

    if "rational" in pr:
        return 0
    return int(pr["p"])


def parse_group(text):
    """Parse a product of cyclic groups such as ``Z2xZ2``."""
    return tuple(int(d) for d in _parse(_pp_group, "group", text))


def parse_box(text, rank):
    """Parse an enumeration box for characters of the given `rank`.

    Returns a |tuple| of ``(lo, hi)`` pairs, one per coordinate.

    """
    pr = _parse(_pp_box, "box", text)

    if "ranges" in pr:
        ranges = tuple((int(lo), int(hi)) for lo, hi in pr["ranges"])
        if len(ranges) != rank or any(lo > hi for lo, hi in ranges):
            raise SpecError("box", text)
        return ranges

    r = int(pr["radius"])
    return tuple((-r, r) for _ in range(rank))


def parse_polynomial_terms(text):
    """Parse a polynomial string into a list of terms.

    Each term is a |tuple| ``(coefficient, powers)`` where `coefficient`
    is a :class:`~fractions.Fraction` and `powers` maps variable names
    to exponents. Repeated variables within a term are multiplied out.

    """
    pr = _parse(_pp_polynomial, "polynomial", text)

    terms = []
    for sign, product in zip(pr[::2], pr[1::2]):
        coeff = Fraction(-1 if sign == "-" else 1)
        powers = {}

        for factor in product:
            if isinstance(factor, str):
                coeff *= Fraction(factor)
            else:
                name, exp = factor[0], int(factor[1])
                powers[name] = powers.get(name, 0) + exp

        terms.append((coeff, powers))

    return terms
