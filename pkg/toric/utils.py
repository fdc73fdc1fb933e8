r"""*Utility functions for* ``toric``.

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

from fractions import Fraction
from functools import reduce
import json
from math import gcd
import time

import attr

from .errors import BudgetExceeded


def dot(u, v):
    """Return the integer pairing of two vectors."""
    return sum(a * b for a, b in zip(u, v))


def content(v):
    """Return the gcd of the entries of `v` (0 for the zero vector)."""
    return reduce(gcd, (abs(int(x)) for x in v), 0)


def primitive(v):
    """Scale an integer (or rational) vector to its primitive integer form.

    The zero vector is returned unchanged.

    """
    v = [Fraction(x) for x in v]
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = content(ints)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def stringify(obj):
    """Recursively render numbers as strings for JSON output.

    Integers and fractions become decimal strings (``"n/d"`` for
    non-integral fractions); booleans and |None| are kept as is.

    """
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, Fraction):
        return str(obj.numerator) if obj.denominator == 1 else str(obj)
    if isinstance(obj, dict):
        return {str(k): stringify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [stringify(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return [stringify(v) for v in sorted(obj)]
    return obj


def dumps(obj):
    """Serialize a result to canonical JSON (sorted keys, numbers as text)."""
    return json.dumps(stringify(obj), sort_keys=True, indent=2)


def matrix_to_json(rows):
    """Encode an integer matrix as arrays of decimal strings."""
    return [[str(int(x)) for x in row] for row in rows]


def matrix_from_json(data):
    """Decode an integer matrix from arrays of numbers or strings."""
    return tuple(tuple(int(x) for x in row) for row in data)


@attr.s(slots=True)
class Budget:
    """Counter guarding a search against runaway inputs.

    Each :meth:`tick` counts one unit of work. Exceeding `limit` units, or
    running past `seconds` of wall-clock time, raises
    :exc:`~toric.errors.BudgetExceeded`.

    """

    #: Description of the counted unit, used in the error message
    what = attr.ib()

    #: Maximum number of units allowed
    limit = attr.ib(default=10 ** 6)

    #: Optional wall-clock allowance in seconds
    seconds = attr.ib(default=None)

    count = attr.ib(default=0, init=False)
    _deadline = attr.ib(default=None, init=False, repr=False)

    def __attrs_post_init__(self):
        """Start the wall clock, if one was given."""
        if self.seconds is not None:
            self._deadline = time.monotonic() + self.seconds

    def tick(self, n=1):
        """Count `n` more units of work."""
        self.count += n
        if self.count > self.limit:
            raise BudgetExceeded(self.what, self.limit)
        if self._deadline is not None and time.monotonic() > self._deadline:
            raise BudgetExceeded("seconds", self.seconds)
