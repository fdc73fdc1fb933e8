r"""*Run configuration for* ``toric``.

``toric`` Toric Objects: Rings, Ideals and Cones.

Settings come from an optional JSON file, then from command-line flags.
Unset flags leave the file's values, and the file's values override the
defaults below.

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

import json

import attr

from .enums import OutputFormat
from .errors import SpecError, UsageError
from .polynomials import GREVLEX, QQ, Field, TermOrder


def _field(value):
    return value if isinstance(value, Field) else Field.parse(str(value))


def _order(value):
    return value if isinstance(value, TermOrder) else TermOrder.parse(value)


def _positive(inst, att, value):
    if value <= 0:
        raise ValueError("'{}' must be positive".format(att.name))


@attr.s(slots=True, frozen=True)
class RunConfig:
    """Settings shared by every command."""

    #: Coefficient field
    field = attr.ib(default=QQ, converter=_field)

    #: Monomial order for Gröbner computations
    order = attr.ib(default=GREVLEX, converter=_order)

    #: Character enumeration box spec, such as ``"±6"``; |None| for auto
    box = attr.ib(default=None)

    #: Maximum number of S-pairs per Gröbner basis
    spair_budget = attr.ib(default=10 ** 6, converter=int, validator=_positive)

    #: Maximum number of nodes in enumerations and searches
    node_budget = attr.ib(default=10 ** 6, converter=int, validator=_positive)

    #: Wall-clock allowance in seconds
    wall_clock = attr.ib(default=600, converter=float, validator=_positive)

    #: Output format
    output = attr.ib(default=OutputFormat.Json, converter=OutputFormat)

    #: Seed for randomized choices
    seed = attr.ib(default=0, converter=int)

    @classmethod
    def from_dict(cls, data):
        """Create from a mapping, rejecting unknown keys."""
        known = {a.name for a in attr.fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise UsageError(
                "Unknown configuration keys: {}".format(sorted(unknown))
            )
        try:
            return cls(**data)
        except (SpecError, ValueError) as e:
            raise UsageError("Invalid configuration: {}".format(e)) from e

    @classmethod
    def from_file(cls, path=None, **overrides):
        """Load `path` if given, then apply the non-|None| `overrides`."""
        data = {}
        if path is not None:
            try:
                with open(path) as f:
                    data = json.load(f)
            except (OSError, ValueError) as e:
                raise UsageError(
                    "Cannot read configuration {}: {}".format(path, e)
                ) from e
        data.update({k: v for k, v in overrides.items() if v is not None})
        return cls.from_dict(data)

    def as_dict(self):
        """Return the settings as a JSON-ready |dict|."""
        return {
            "field": str(self.field),
            "order": str(self.order),
            "box": self.box,
            "spair_budget": self.spair_budget,
            "node_budget": self.node_budget,
            "wall_clock": self.wall_clock,
            "output": self.output.value,
            "seed": self.seed,
        }
