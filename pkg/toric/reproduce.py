r"""*Fixture runner for* ``toric``.

``toric`` Toric Objects: Rings, Ideals and Cones.

Each fixture in ``fixtures/acceptance.json`` names an operation, its input
and the expected value. :func:`reproduce_all` runs them in file order and
reports failures as rows of the table rather than raising.

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
import os
import time

import attr

from .cli import FIXTURES, load_fan, load_group, load_json
from .cohomology import box_stability_check, cohomology
from .config import RunConfig
from .cuts import (
    Graph,
    cut_polytope_points,
    four_coloring,
    is_proper,
    seymour_inequalities,
)
from .enums import CohomologyMethod
from .errors import ToricError
from .fans import WeilDivisor, class_group
from .ideals import Ideal, toric_ideal
from .matroids import Matroid, fedder_check, white_check
from .phylo import FlowTable, complexity_estimate, flows, move_generate
from .polyhedra import (
    Cone,
    PointConfig,
    Polytope,
    degree_of_variety,
    hilbert_basis,
    is_normal_configuration,
    is_normal_polytope,
    is_very_ample,
    monoid_is_saturated,
)
from .triangulations import check_sturmfels_correspondence
from .utils import dot, stringify


logger = logging.getLogger(__name__)

#: Default fixture file
ACCEPTANCE = os.path.join(FIXTURES, "acceptance.json")


def _config(inp):
    return PointConfig.from_json(load_json(inp["points"]))


def _polytope(inp):
    return Polytope.from_json(load_json(inp["points"]))


def _graph(inp):
    return Graph.from_json(load_json(inp["graph"]))


def _matroid(inp):
    return Matroid.from_json(load_json(inp["matroid"]))


# ## OPERATIONS ##


def _op_toric_ideal(inp, config):
    return toric_ideal(_config(inp), budget=config.spair_budget)


def _same_ideal(actual, expected):
    other = Ideal.parse(expected, actual.names, actual.field)
    return actual.equals(other)


def _op_hilbert_basis(inp, config):
    S = _config(inp)
    return [list(h) for h in hilbert_basis(Cone(S.ambient_rank, S.points))]


def _op_class_group(inp, config):
    return class_group(load_fan(inp["fan"])).to_json()


def _op_cohomology(inp, config):
    fan = load_fan(inp["fan"])
    D = WeilDivisor(fan, inp["divisor"])
    result = cohomology(fan, D, CohomologyMethod.Both)
    if not box_stability_check(CohomologyMethod.Both, fan, D):
        raise ToricError("enumeration box is not stable")
    return list(result.dims)


def _op_very_ample(inp, config):
    return is_very_ample(_polytope(inp), config.node_budget)


def _op_normal_polytope(inp, config):
    return is_normal_polytope(_polytope(inp), config.node_budget)


def _op_saturated(inp, config):
    return monoid_is_saturated(_config(inp), config.node_budget)


def _op_normal_configuration(inp, config):
    return is_normal_configuration(_config(inp), config.node_budget)


def _op_degree(inp, config):
    return degree_of_variety(_polytope(inp))


def _op_correspondence(inp, config):
    return check_sturmfels_correspondence(
        _config(inp), inp["weights"], budget=config.spair_budget
    ).equal


def _op_four_coloring(inp, config):
    G = _graph(inp)
    return is_proper(G, four_coloring(G))


def _op_seymour_valid(inp, config):
    G = _graph(inp)
    ineqs = seymour_inequalities(G)
    return all(
        dot(c, x) >= 0 for x in cut_polytope_points(G).points for c in ineqs
    )


def _op_white(inp, config):
    report = white_check(_matroid(inp), inp["degree"], config.node_budget)
    return report.all_connected


def _op_fedder(inp, config):
    report = fedder_check(_matroid(inp), inp["f"], config.spair_budget)
    return {"is_f_pure": report.is_f_pure, "contains": report.contains_f}


def _op_flow_count(inp, config):
    return len(flows(load_group(inp["group"]), inp["n"]))


def _op_connect(inp, config):
    G = load_group(inp["group"])
    path = move_generate(
        FlowTable(G, load_json(inp["t0"])),
        FlowTable(G, load_json(inp["t1"])),
        inp["degree"],
        config.node_budget,
    )
    return None if path is None else len(path) - 1


def _op_complexity(inp, config):
    G = load_group(inp["group"])
    return complexity_estimate(
        G, inp["n"], inp["max_degree"], config.node_budget
    ).phi_hat


_OPS = {
    "toric_ideal": _op_toric_ideal,
    "hilbert_basis": _op_hilbert_basis,
    "class_group": _op_class_group,
    "cohomology": _op_cohomology,
    "very_ample": _op_very_ample,
    "normal_polytope": _op_normal_polytope,
    "saturated": _op_saturated,
    "normal_configuration": _op_normal_configuration,
    "degree": _op_degree,
    "correspondence": _op_correspondence,
    "four_coloring": _op_four_coloring,
    "seymour_valid": _op_seymour_valid,
    "white": _op_white,
    "fedder": _op_fedder,
    "flow_count": _op_flow_count,
    "connect": _op_connect,
    "complexity": _op_complexity,
}

#: Comparisons other than equality of the JSON forms
_COMPARE = {"toric_ideal": _same_ideal}

_SHOW = {"toric_ideal": lambda I: I.format()}


# ## REPORT ##


@attr.s(slots=True, frozen=True)
class FixtureResult:
    """Outcome of one fixture."""

    name = attr.ib()
    group = attr.ib()
    passed = attr.ib()
    seconds = attr.ib()
    expected = attr.ib(default=None)
    actual = attr.ib(default=None)

    #: Error message, if the operation raised
    error = attr.ib(default=None)

    def to_json(self):
        """Return the JSON form."""
        return {
            "name": self.name,
            "group": self.group,
            "passed": self.passed,
            "seconds": "{:.3f}".format(self.seconds),
            "expected": self.expected,
            "actual": self.actual,
            "error": self.error,
        }


@attr.s(slots=True, frozen=True)
class ReproduceReport:
    """Results of a fixture run, in file order."""

    rows = attr.ib(converter=tuple)

    @property
    def all_passed(self):
        """Report whether every fixture passed."""
        return all(r.passed for r in self.rows)

    def table(self):
        """Render a pass/fail table with timings."""
        width = max((len(r.name) for r in self.rows), default=4)
        lines = []
        for r in self.rows:
            status = "PASS" if r.passed else "FAIL"
            line = "{:<{w}}  {}  {:8.3f}s".format(
                r.name, status, r.seconds, w=width
            )
            if not r.passed:
                line += "  expected {} got {}".format(
                    r.expected, r.error or r.actual
                )
            lines.append(line)
        return "\n".join(lines)

    def to_json(self):
        """Return the JSON form."""
        return {
            "all_passed": self.all_passed,
            "passed": sum(r.passed for r in self.rows),
            "total": len(self.rows),
            "rows": [r.to_json() for r in self.rows],
        }


def run_fixture(case, config):
    """Run one fixture case and return its :class:`FixtureResult`."""
    op = case["op"]
    start = time.perf_counter()
    try:
        actual = _OPS[op](case["input"], config)
    except (ToricError, ValueError, KeyError) as e:
        logger.warning("fixture %r raised %s", case["name"], e)
        return FixtureResult(
            case["name"],
            case["group"],
            False,
            time.perf_counter() - start,
            case["expected"],
            error="{}: {}".format(type(e).__name__, e),
        )

    compare = _COMPARE.get(op)
    if compare is None:
        passed = stringify(actual) == stringify(case["expected"])
    else:
        passed = compare(actual, case["expected"])
    shown = _SHOW.get(op, lambda a: a)(actual)
    return FixtureResult(
        case["name"],
        case["group"],
        passed,
        time.perf_counter() - start,
        case["expected"],
        shown,
    )


def reproduce_all(only=None, config=None, path=ACCEPTANCE):
    """Run every fixture, or those of the group `only`, in file order."""
    config = config or RunConfig()
    cases = load_json(path)
    if only is not None:
        cases = [c for c in cases if c["group"] == only]

    rows = []
    for case in cases:
        row = run_fixture(case, config)
        logger.info(
            "%s: %s", case["name"], "pass" if row.passed else "FAIL"
        )
        rows.append(row)
    return ReproduceReport(rows)
