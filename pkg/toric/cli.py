r"""*Command-line interface for* ``toric``.

``toric`` Toric Objects: Rings, Ideals and Cones.

Every command prints one JSON object (or a ``key: value`` summary with
``--format text``) holding the command, the configuration in force and the
result. Exit codes are 0 on success, 1 for computational errors and 2 for
invalid usage.

Inputs named ``--points``, ``--fan``, ``--graph`` and ``--matroid`` take a
JSON string, a path to a JSON file, or the name of a bundled fixture file.
Fans also accept the preset names ``P1``, ``P2``, ``P3``, ``P1xP1``,
``F1``, ``F2``, ``F3`` and ``quadric``.

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

import argparse
import json
import logging
import os
import sys

from . import __version__
from .cohomology import box_stability_check, cohomology
from .config import RunConfig
from .cuts import (
    Graph,
    cut_lattice_certificate,
    decompose_targets,
    four_coloring,
    normality_evidence,
    seymour_inequalities,
)
from .enums import CohomologyMethod, OutputFormat
from .errors import ToricError, UsageError
from .fans import (
    PRESETS,
    Fan,
    WeilDivisor,
    cartier_data,
    class_group,
    global_sections,
    positivity,
)
from .grammar import parse_box, parse_int_list
from .ideals import toric_ideal
from .matroids import (
    Matroid,
    fedder_check,
    matroid_base_polytope,
    matroid_toric_ideal,
    white_check,
)
from .phylo import (
    GROUPS,
    FiniteAbelianGroup,
    FlowTable,
    complexity_estimate,
    flows,
    move_generate,
)
from .polyhedra import (
    Cone,
    PointConfig,
    Polytope,
    degree_of_variety,
    ehrhart,
    hilbert_basis,
    is_smooth_polytope,
    is_very_ample,
    saturation_report,
)
from .triangulations import (
    check_sturmfels_correspondence,
    multiplicity_report,
    regular_subdivision,
)
from .utils import Budget, dumps


logger = logging.getLogger(__name__)

#: Directory of the bundled fixture files
FIXTURES = os.path.join(os.path.dirname(os.path.abspath(__file__)), "fixtures")


# ## INPUTS ##


def load_json(text):
    """Read JSON from a file, a bundled fixture, or the string itself."""
    for path in (text, os.path.join(FIXTURES, text)):
        if os.path.isfile(path):
            with open(path) as f:
                return json.load(f)
    try:
        return json.loads(text)
    except ValueError as e:
        raise UsageError("Not a JSON value or file: {}".format(text)) from e


def load_fan(text):
    """Return a preset fan by name, or read one from JSON."""
    if text in PRESETS:
        return PRESETS[text]()
    return Fan.from_json(load_json(text))


def load_group(text):
    """Return a preset group by name, or parse a product of cyclic groups."""
    return GROUPS.get(text) or FiniteAbelianGroup.parse(text)


def _require(args, *names):
    for name in names:
        if getattr(args, name, None) is None:
            raise UsageError("--{} is required".format(name.replace("_", "-")))


def _points(args):
    _require(args, "points")
    return PointConfig.from_json(load_json(args.points))


def _divisor(args):
    _require(args, "fan", "divisor")
    fan = load_fan(args.fan)
    return WeilDivisor(fan, parse_int_list(args.divisor))


def _spairs(config):
    return Budget("S-pairs", config.spair_budget, config.wall_clock)


# ## COMMANDS ##


def _cmd_ideal(args, config):
    I = toric_ideal(
        _points(args),
        field=config.field,
        homogenize=args.homogenize,
        order=config.order,
        budget=_spairs(config),
    )
    return I.to_json(config.order)


def _cmd_normal(args, config):
    S = _points(args)
    if not S.is_homogeneous():
        S = S.homogenize()
    return saturation_report(S, config.node_budget, config.seed).to_json()


def _cmd_very_ample(args, config):
    P = Polytope.from_json(load_json(args.points))
    return {"very_ample": is_very_ample(P, config.node_budget)}


def _cmd_smooth(args, config):
    P = Polytope.from_json(load_json(args.points))
    return {"smooth": is_smooth_polytope(P)}


def _cmd_hilbert_basis(args, config):
    S = _points(args)
    C = Cone(S.ambient_rank, S.points)
    return {"hilbert_basis": hilbert_basis(C, config.seed)}


def _cmd_ehrhart(args, config):
    P = Polytope.from_json(load_json(args.points))
    poly = ehrhart(P)
    return {
        "coefficients": poly.to_json(),
        "polynomial": str(poly),
        "degree": degree_of_variety(P),
    }


def _cmd_classgroup(args, config):
    _require(args, "fan")
    return class_group(load_fan(args.fan)).to_json()


def _cmd_cartier(args, config):
    return cartier_data(_divisor(args)).to_json()


def _cmd_positivity(args, config):
    return positivity(_divisor(args), config.node_budget).to_json()


def _cmd_sections(args, config):
    return global_sections(_divisor(args)).to_json()


def _cmd_cohomology(args, config):
    D = _divisor(args)
    box = None
    if config.box is not None:
        box = parse_box(config.box, D.fan.ambient_rank)

    method = CohomologyMethod(args.method)
    result = cohomology(D.fan, D, method, box, config.field)
    out = result.to_json()
    out.update(("H{}".format(p), d) for p, d in enumerate(result.dims))
    if method is CohomologyMethod.Both:
        out["methods_agree"] = True
    if args.check_box:
        out["box_stable"] = box_stability_check(
            method, D.fan, D, result.box, config.field
        )
    return out


def _cmd_triangulate(args, config):
    _require(args, "weights")
    S = _points(args)
    omega = parse_int_list(args.weights)
    out = regular_subdivision(S, omega).to_json()
    if args.check:
        out["correspondence"] = check_sturmfels_correspondence(
            S, omega, config.field, _spairs(config)
        ).to_json()
        out["multiplicities"] = multiplicity_report(
            S, omega, config.field, _spairs(config)
        ).to_json()
    return out


def _cmd_cuts(args, config):
    _require(args, "graph")
    G = Graph.from_json(load_json(args.graph))
    if args.action == "fourcolor":
        coloring = four_coloring(G)
        return {"coloring": [coloring[v] for v in range(G.n)]}
    if args.action == "facets":
        return {"inequalities": seymour_inequalities(G)}
    if args.action == "decompose":
        parts = decompose_targets(G)
        return {
            "partitions": None
            if parts is None
            else [sorted(B) for _, B in parts],
            "lattice_certificate": cut_lattice_certificate(G),
        }
    return normality_evidence(G, config.node_budget).to_json()


def _cmd_matroid(args, config):
    _require(args, "matroid")
    M = Matroid.from_json(load_json(args.matroid))
    if args.action == "white":
        return white_check(M, args.degree, config.node_budget).to_json()
    if args.action == "fedder":
        return fedder_check(M, args.f, _spairs(config)).to_json()
    if args.action == "polytope":
        return matroid_base_polytope(M, config.node_budget).to_json()
    return matroid_toric_ideal(M, config.field, _spairs(config)).to_json()


def _table(G, text):
    return FlowTable(G, load_json(text))


def _cmd_phylo(args, config):
    _require(args, "group", "n")
    G = load_group(args.group)
    if args.action == "flows":
        return {
            "group": str(G),
            "flows": [[G.format(g) for g in f] for f in flows(G, args.n)],
        }
    if args.action == "complexity":
        return complexity_estimate(
            G, args.n, args.max_degree, config.node_budget
        ).to_json()

    _require(args, "t0", "t1")
    path = move_generate(
        _table(G, args.t0), _table(G, args.t1), args.degree, config.node_budget
    )
    return {
        "connected": path is not None,
        "moves": None if path is None else len(path) - 1,
        "path": None if path is None else [T.to_json() for T in path],
    }


def _cmd_reproduce(args, config):
    from .reproduce import reproduce_all

    report = reproduce_all(args.only, config)
    return report.to_json()


_COMMANDS = {
    "ideal": _cmd_ideal,
    "normal": _cmd_normal,
    "very-ample": _cmd_very_ample,
    "smooth": _cmd_smooth,
    "hilbert-basis": _cmd_hilbert_basis,
    "ehrhart": _cmd_ehrhart,
    "classgroup": _cmd_classgroup,
    "cartier": _cmd_cartier,
    "positivity": _cmd_positivity,
    "sections": _cmd_sections,
    "cohomology": _cmd_cohomology,
    "triangulate": _cmd_triangulate,
    "cuts": _cmd_cuts,
    "matroid": _cmd_matroid,
    "phylo": _cmd_phylo,
    "reproduce": _cmd_reproduce,
}


def run(command, args, config):
    """Run one command; return the output |dict| and the exit code.

    Errors from the computation are reported in the output rather than
    raised: :exc:`~toric.errors.UsageError` gives code 2 and any other
    :exc:`~toric.errors.ToricError` code 1.

    """
    out = {"command": command, "config": config.as_dict()}
    if command not in _COMMANDS:
        out.update(error="UsageError", message="Unknown command")
        return out, 2

    try:
        out["result"] = _COMMANDS[command](args, config)
    except UsageError as e:
        out.update(error=type(e).__name__, message=str(e))
        return out, 2
    except ToricError as e:
        logger.info("%s failed: %s", command, e)
        out.update(error=type(e).__name__, message=str(e))
        return out, 1
    except ValueError as e:
        out.update(error="UsageError", message=str(e))
        return out, 2

    if command == "reproduce" and not out["result"]["all_passed"]:
        return out, 1
    return out, 0


# ## OUTPUT ##


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _flatten(v, "{}{}.".format(prefix, k))
    else:
        yield prefix[:-1], obj


def render(out, fmt=OutputFormat.Json):
    """Render a command output as JSON or as ``key: value`` lines."""
    if OutputFormat(fmt) is OutputFormat.Json:
        return dumps(out)
    return "\n".join(
        "{}: {}".format(k, json.dumps(v)) for k, v in _flatten(out)
    )


# ## PARSER ##


#: Options whose values may start with a minus sign
SIGNED_OPTIONS = ("--divisor", "--weights", "--box")


def attach_signed_values(argv):
    """Join each signed option in `argv` to a value such as ``-3,-5,0,0``.

    :mod:`argparse` only reads a single negative number as a value; a
    list like ``-3,-5`` would otherwise be taken for an option.

    """
    out = []
    for arg in argv:
        if out and out[-1] in SIGNED_OPTIONS and arg[1:2].isdigit():
            out[-1] = "{}={}".format(out[-1], arg)
        else:
            out.append(arg)
    return out


def _add_divisor_args(prs):
    prs.add_argument("--fan", help="Fan JSON, file or preset name")
    prs.add_argument("--divisor", help="Coefficients such as -3,-5,0,0")


def get_parser():
    """Build the argument parser."""
    prs = argparse.ArgumentParser(
        prog="toric",
        description="Toric ideals, cones, divisors and their applications",
    )
    prs.add_argument(
        "--version", action="version", version="%(prog)s " + __version__
    )
    prs.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Log progress to stderr (repeat for debug output)",
    )
    prs.add_argument("--config", help="JSON file of settings")
    prs.add_argument("--seed", type=int)
    prs.add_argument("--budget-spairs", dest="spair_budget", type=int)
    prs.add_argument("--budget-nodes", dest="node_budget", type=int)
    prs.add_argument("--budget-seconds", dest="wall_clock", type=float)
    prs.add_argument(
        "--format",
        dest="output",
        choices=[f.value for f in OutputFormat],
    )
    prs.add_argument("--field", help="QQ or GF(p)")
    prs.add_argument("--order", help="lex, grlex, grevlex or weight(...)")
    prs.add_argument("--box", help="Character box, such as ±6")

    sub = prs.add_subparsers(dest="command", metavar="COMMAND")

    p = sub.add_parser("ideal", help="Toric ideal of a point configuration")
    p.add_argument("--points")
    p.add_argument("--homogenize", action="store_true")

    for name, text in (
        ("normal", "Saturation test with Hilbert basis"),
        ("very-ample", "Very ampleness of a lattice polytope"),
        ("smooth", "Smoothness of a lattice polytope"),
        ("hilbert-basis", "Hilbert basis of a cone"),
        ("ehrhart", "Ehrhart polynomial and degree"),
    ):
        sub.add_parser(name, help=text).add_argument("--points")

    sub.add_parser("classgroup", help="Class group of a fan").add_argument(
        "--fan"
    )
    for name, text in (
        ("cartier", "Local data of a Cartier divisor"),
        ("positivity", "Global generation and ampleness"),
        ("sections", "Lattice points of the divisor polytope"),
    ):
        _add_divisor_args(sub.add_parser(name, help=text))

    p = sub.add_parser("cohomology", help="Cohomology of O(D)")
    _add_divisor_args(p)
    p.add_argument(
        "--method",
        choices=[m.value for m in CohomologyMethod],
        default=CohomologyMethod.Coh1.value,
    )
    p.add_argument("--check-box", action="store_true")

    p = sub.add_parser("triangulate", help="Regular subdivision by weights")
    p.add_argument("--points")
    p.add_argument("--weights", help="One integer height per point")
    p.add_argument("--check", action="store_true")

    p = sub.add_parser("cuts", help="Cut polytopes of graphs")
    p.add_argument(
        "action",
        choices=["fourcolor", "facets", "normal-evidence", "decompose"],
    )
    p.add_argument("--graph")

    p = sub.add_parser("matroid", help="Matroid base polytopes and ideals")
    p.add_argument("action", choices=["white", "fedder", "polytope", "ideal"])
    p.add_argument("--matroid")
    p.add_argument("--degree", type=int, default=2)
    p.add_argument("--f", help="Polynomial tested against the Fedder colon")

    p = sub.add_parser("phylo", help="Group-based models on star trees")
    p.add_argument("action", choices=["flows", "complexity", "connect"])
    p.add_argument("--group")
    p.add_argument("--n", type=int)
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--degree", type=int, default=2)
    p.add_argument("--t0", help="Rows of the first table")
    p.add_argument("--t1", help="Rows of the second table")

    p = sub.add_parser("reproduce", help="Run the bundled fixtures")
    p.add_argument("--only", help="Run only fixtures of this operation group")

    return prs


def main(argv=None):
    """Entry point for the ``toric`` console script."""
    prs = get_parser()
    if argv is None:
        argv = sys.argv[1:]
    ns = prs.parse_args(attach_signed_values(argv))
    if ns.command is None:
        prs.print_usage(sys.stderr)
        return 2

    logging.basicConfig(
        level=[logging.WARNING, logging.INFO, logging.DEBUG][
            min(ns.verbose, 2)
        ],
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )

    try:
        config = RunConfig.from_file(
            ns.config,
            field=ns.field,
            order=ns.order,
            box=ns.box,
            spair_budget=ns.spair_budget,
            node_budget=ns.node_budget,
            wall_clock=ns.wall_clock,
            output=ns.output,
            seed=ns.seed,
        )
    except UsageError as e:
        print(dumps({"error": "UsageError", "message": str(e)}))
        return 2

    out, code = run(ns.command, ns, config)
    print(render(out, config.output))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
