r"""*Exact multivariate polynomials for* ``toric``.

``toric`` Toric Objects: Rings, Ideals and Cones.

Coefficients live in ℚ (as :class:`~fractions.Fraction`) or in a prime
field 𝔽p (as integers reduced mod p). Monomials are exponent tuples.

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
import re

import attr
import sympy

from .enums import FieldKind, OrderKind
from .errors import FieldMismatch, SpecError
from .grammar import parse_field, parse_order, parse_polynomial_terms


MAX_CHARACTERISTIC = 97


def _valid_characteristic(instance, attribute, value):
    if value != 0 and not (
        value <= MAX_CHARACTERISTIC and sympy.isprime(value)
    ):
        raise SpecError("field", "GF({})".format(value))


@attr.s(slots=True, frozen=True)
class Field:
    """Coefficient field ℚ (characteristic 0) or 𝔽p for a small prime p."""

    #: 0 for the rationals, else the prime p
    characteristic = attr.ib(converter=int, validator=_valid_characteristic)

    @classmethod
    def parse(cls, text):
        """Create from ``"QQ"`` or ``"GF(p)"``."""
        return cls(parse_field(text))

    def __str__(self):
        """Render as ``QQ`` or ``GF(p)``."""
        if self.characteristic == 0:
            return FieldKind.Rational.value
        return "{}({})".format(FieldKind.Finite.value, self.characteristic)

    def norm(self, x):
        """Reduce the result of integer arithmetic into the field."""
        return x % self.characteristic if self.characteristic else x

    def coerce(self, x):
        """Map an integer or rational number into the field."""
        x = Fraction(x)
        if self.characteristic == 0:
            return x

        p = self.characteristic
        if x.denominator % p == 0:
            raise FieldMismatch(str(self), "denominator {}".format(x))
        return x.numerator * pow(x.denominator, p - 2, p) % p

    def inverse(self, x):
        """Return the multiplicative inverse of a nonzero element."""
        if self.characteristic == 0:
            return 1 / Fraction(x)
        return pow(x, self.characteristic - 2, self.characteristic)

    def format(self, c):
        """Render an element as text."""
        if self.characteristic == 0:
            c = Fraction(c)
            return str(c.numerator) if c.denominator == 1 else str(c)
        return str(c)

    def to_json(self, c):
        """Encode an element as ``"num/den"`` or its residue."""
        return self.format(c)


#: The rational numbers
QQ = Field(0)

#: The field with two elements
GF2 = Field(2)


def _order_key(kind, exp):
    if kind is OrderKind.Lex:
        return tuple(exp)
    if kind is OrderKind.GrLex:
        return (sum(exp), tuple(exp))
    return (sum(exp), tuple(-e for e in reversed(exp)))


def _valid_weights(instance, attribute, value):
    if instance.kind is OrderKind.Weight:
        if value is None or any(w < 0 for w in value):
            raise SpecError("weight order", str(value))


@attr.s(slots=True, frozen=True)
class TermOrder:
    """Monomial order; the first variable is the largest."""

    #: Family of the order
    kind = attr.ib(converter=OrderKind)

    #: Nonnegative weight vector, for weight orders only
    weights = attr.ib(
        default=None,
        converter=attr.converters.optional(lambda w: tuple(int(x) for x in w)),
        validator=_valid_weights,
    )

    #: Order breaking weight ties, for weight orders only
    tiebreak = attr.ib(
        default=None, converter=attr.converters.optional(OrderKind)
    )

    def __attrs_post_init__(self):
        """Fill in the default tiebreak of a weight order."""
        if self.kind is OrderKind.Weight:
            if self.tiebreak is None:
                object.__setattr__(self, "tiebreak", OrderKind.GrevLex)
            if self.tiebreak is OrderKind.Weight:
                raise SpecError("weight order", str(self))

    @classmethod
    def parse(cls, text):
        """Create from ``"lex"``, ``"grevlex"``, ``"weight(1,0;lex)"``…."""
        return cls(*parse_order(text))

    @classmethod
    def weight(cls, weights, tiebreak=OrderKind.GrevLex):
        """Create a weight order."""
        return cls(OrderKind.Weight, weights, tiebreak)

    def key(self, exp):
        """Return a sort key; larger keys are larger monomials."""
        if self.kind is OrderKind.Weight:
            w = sum(a * b for a, b in zip(self.weights, exp))
            return (w,) + (_order_key(self.tiebreak, exp),)
        return _order_key(self.kind, exp)

    def __str__(self):
        """Render in the spec syntax accepted by :meth:`parse`."""
        if self.kind is OrderKind.Weight:
            return "weight({};{})".format(
                ",".join(str(w) for w in self.weights), self.tiebreak.value
            )
        return self.kind.value


LEX = TermOrder(OrderKind.Lex)
GRLEX = TermOrder(OrderKind.GrLex)
GREVLEX = TermOrder(OrderKind.GrevLex)


def default_names(n):
    """Return x, y, z, t for up to four variables, else x1 … xn."""
    if n <= 4:
        return tuple("xyzt"[:n])
    return tuple("x{}".format(i + 1) for i in range(n))


def _natural_key(name):
    return [
        int(part) if part.isdigit() else part
        for part in re.split(r"(\d+)", name)
    ]


def _canonical_terms(terms):
    return tuple(sorted(terms, reverse=True))


@attr.s(slots=True, frozen=True)
class Polynomial:
    """Polynomial in `nvars` variables with no zero coefficients stored.

    Terms are ``(exponent, coefficient)`` pairs sorted by exponent,
    largest first in the lexicographic sense.

    """

    #: Number of variables
    nvars = attr.ib(converter=int)

    #: Canonically sorted terms
    terms = attr.ib(converter=_canonical_terms)

    #: Coefficient field
    field = attr.ib(default=QQ)

    def __attrs_post_init__(self):
        """Check exponent lengths and that no zero coefficient is stored."""
        for exp, c in self.terms:
            if len(exp) != self.nvars:
                raise ValueError("Exponent length differs from nvars")
            if c == 0:
                raise ValueError("Zero coefficient stored")

    @classmethod
    def from_dict(cls, nvars, coeffs, field=QQ):
        """Create from an ``{exponent: coefficient}`` mapping."""
        terms = []
        for exp, c in coeffs.items():
            c = field.coerce(c)
            if c != 0:
                terms.append((tuple(int(e) for e in exp), c))
        return cls(nvars, terms, field)

    @classmethod
    def monomial(cls, exp, coeff=1, field=QQ):
        """Create the term ``coeff · x^exp``."""
        return cls.from_dict(len(exp), {tuple(exp): coeff}, field)

    @classmethod
    def variable(cls, nvars, i, field=QQ):
        """Create the `i`-th variable."""
        exp = tuple(int(j == i) for j in range(nvars))
        return cls.monomial(exp, 1, field)

    @classmethod
    def constant(cls, nvars, c, field=QQ):
        """Create a constant polynomial."""
        return cls.from_dict(nvars, {(0,) * nvars: c}, field)

    @classmethod
    def binomial(cls, plus, minus, field=QQ):
        """Create ``x^plus − x^minus``."""
        coeffs = {tuple(plus): 1}
        coeffs[tuple(minus)] = coeffs.get(tuple(minus), 0) - 1
        return cls.from_dict(len(plus), coeffs, field)

    @classmethod
    def parse(cls, text, names=None, field=QQ):
        """Parse a polynomial string such as ``"x^3 - y^2"``.

        Variable names default to those appearing in `text`, in natural
        sort order.

        """
        terms = parse_polynomial_terms(text)
        if names is None:
            found = {n for _, powers in terms for n in powers}
            names = sorted(found, key=_natural_key)
        names = tuple(names)
        index = {n: i for i, n in enumerate(names)}

        coeffs = {}
        for c, powers in terms:
            exp = [0] * len(names)
            for name, e in powers.items():
                if name not in index:
                    raise SpecError("polynomial", text)
                exp[index[name]] += e
            exp = tuple(exp)
            coeffs[exp] = coeffs.get(exp, 0) + c

        return cls.from_dict(len(names), coeffs, field)

    @classmethod
    def from_json(cls, nvars, data, field=QQ):
        """Create from ``[{"exp": […], "coeff": "…"}, …]``."""
        coeffs = {}
        for t in data:
            exp = tuple(int(e) for e in t["exp"])
            coeffs[exp] = coeffs.get(exp, 0) + Fraction(t["coeff"])
        return cls.from_dict(nvars, coeffs, field)

    def to_json(self):
        """Return the JSON term list."""
        return [
            {"exp": [str(e) for e in exp], "coeff": self.field.to_json(c)}
            for exp, c in self.terms
        ]

    def as_dict(self):
        """Return the terms as an ``{exponent: coefficient}`` dict."""
        return dict(self.terms)

    def _check(self, other):
        if self.field != other.field:
            raise FieldMismatch(str(self.field), str(other.field))
        if self.nvars != other.nvars:
            raise ValueError("Polynomials live in different rings")

    def is_zero(self):
        """Report whether the polynomial is zero."""
        return not self.terms

    def __bool__(self):
        """Return False for the zero polynomial."""
        return bool(self.terms)

    def __neg__(self):
        """Negate."""
        f = self.field
        return Polynomial(
            self.nvars, [(e, f.norm(-c)) for e, c in self.terms], f
        )

    def __add__(self, other):
        """Add two polynomials."""
        self._check(other)
        d = self.as_dict()
        for e, c in other.terms:
            d[e] = self.field.norm(d.get(e, 0) + c)
        return Polynomial.from_dict(self.nvars, d, self.field)

    def __sub__(self, other):
        """Subtract two polynomials."""
        return self + (-other)

    def __mul__(self, other):
        """Multiply by a polynomial or a scalar."""
        f = self.field
        if not isinstance(other, Polynomial):
            c = f.coerce(other)
            return Polynomial.from_dict(
                self.nvars, {e: f.norm(a * c) for e, a in self.terms}, f
            )

        self._check(other)
        d = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                d[e] = f.norm(d.get(e, 0) + c1 * c2)
        return Polynomial.from_dict(self.nvars, d, f)

    __rmul__ = __mul__

    def __pow__(self, k):
        """Raise to a nonnegative integer power."""
        result = Polynomial.constant(self.nvars, 1, self.field)
        for _ in range(k):
            result = result * self
        return result

    @property
    def degree(self):
        """Return the total degree (-1 for zero)."""
        return max((sum(e) for e, _ in self.terms), default=-1)

    def is_homogeneous(self):
        """Report whether all terms share one total degree."""
        return len({sum(e) for e, _ in self.terms}) <= 1

    def is_monomial(self):
        """Report whether there is exactly one term."""
        return len(self.terms) == 1

    def is_binomial(self):
        """Report whether there are exactly two terms."""
        return len(self.terms) == 2

    def support(self):
        """Return the indices of the variables that occur."""
        return frozenset(
            i for e, _ in self.terms for i, a in enumerate(e) if a
        )

    def leading_term(self, order):
        """Return the leading ``(exponent, coefficient)`` under `order`."""
        return max(self.terms, key=lambda t: order.key(t[0]))

    def leading_monomial(self, order):
        """Return the leading exponent under `order`."""
        return self.leading_term(order)[0]

    def monic(self, order):
        """Scale so the leading coefficient is 1."""
        if not self.terms:
            return self
        return self * self.field.inverse(self.leading_term(order)[1])

    def initial_form(self, weights):
        """Return the sum of the terms of largest weight."""
        def w(e):
            return sum(a * b for a, b in zip(weights, e))

        top = max(w(e) for e, _ in self.terms)
        return Polynomial(
            self.nvars, [t for t in self.terms if w(t[0]) == top], self.field
        )

    def frobenius(self):
        """Return the p-th power over 𝔽p, computed termwise."""
        p = self.field.characteristic
        if p == 0:
            raise FieldMismatch("GF(p)", str(self.field))
        return Polynomial(
            self.nvars,
            [(tuple(p * a for a in e), c) for e, c in self.terms],
            self.field,
        )

    def evaluate(self, point):
        """Evaluate at a point of field elements."""
        f = self.field
        total = 0
        for e, c in self.terms:
            v = c
            for x, a in zip(point, e):
                v = f.norm(v * f.coerce(x) ** a)
            total = f.norm(total + v)
        return total

    def change_field(self, field):
        """Read the coefficients in another field."""
        return Polynomial.from_dict(
            self.nvars, {e: Fraction(c) for e, c in self.terms}, field
        )

    def substitute_ones(self, indices):
        """Set the variables with the given indices to 1."""
        d = {}
        f = self.field
        for e, c in self.terms:
            e = tuple(0 if i in indices else a for i, a in enumerate(e))
            d[e] = f.norm(d.get(e, 0) + c)
        return Polynomial.from_dict(self.nvars, d, f)

    def extend(self, k=1):
        """Embed into a ring with `k` more variables appended."""
        return Polynomial(
            self.nvars + k,
            [(e + (0,) * k, c) for e, c in self.terms],
            self.field,
        )

    def project(self, keep):
        """Restrict to the variables in `keep`, which cover the support."""
        keep = list(keep)
        if self.support() - set(keep):
            raise ValueError("Dropped variable occurs in the polynomial")
        return Polynomial(
            len(keep),
            [(tuple(e[i] for i in keep), c) for e, c in self.terms],
            self.field,
        )

    def format(self, names=None, order=None):
        """Render as text, e.g. ``x^3 - y^2``, largest term first."""
        if not self.terms:
            return "0"
        names = names or default_names(self.nvars)
        order = order or TermOrder(OrderKind.GrevLex)
        char = self.field.characteristic

        out = []
        terms = sorted(
            self.terms, key=lambda t: order.key(t[0]), reverse=True
        )
        for k, (e, c) in enumerate(terms):
            mono = "*".join(
                n if a == 1 else "{}^{}".format(n, a)
                for n, a in zip(names, e)
                if a
            )
            neg = char == 0 and c < 0
            mag = self.field.format(-c if neg else c)
            if mono and mag == "1":
                body = mono
            elif mono:
                body = mag + "*" + mono
            else:
                body = mag
            if k == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append(("- " if neg else "+ ") + body)

        return " ".join(out)

    def __str__(self):
        """Render with the default variable names."""
        return self.format()


def parse_polynomial(text, names=None, field=QQ):
    """Parse a polynomial string; see :meth:`Polynomial.parse`."""
    return Polynomial.parse(text, names, field)
