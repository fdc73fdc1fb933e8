r"""*Master script for* ``toric`` *test suite*.

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


class AP(object):
    """ Container for arguments for selecting test suites.

    Also includes PFX, a helper string for substitution/formatting.

    """

    ALL = "all"

    FAST = "fast"

    README = "readme"

    LATTICE = "lattice"
    POLYHEDRA = "polyhedra"
    IDEALS = "ideals"
    TRIANGULATIONS = "triangulations"
    FANS = "fans"
    COHOMOLOGY = "cohomology"
    CUTS = "cuts"
    MATROIDS = "matroids"
    PHYLO = "phylo"
    CLI = "cli"

    PFX = "--{0}"


def get_parser():
    import argparse

    # Create the parser
    prs = argparse.ArgumentParser(description="Run tests for toric")

    # Verbosity argument
    prs.add_argument("-v", action="store_true", help="Show verbose output")

    # Test subgroups
    grp_areas = prs.add_argument_group(title="Run tests for one area")

    # Options without subgroups
    prs.add_argument(
        AP.PFX.format(AP.ALL),
        "-a",
        action="store_true",
        help="Run all tests (overrides any other selections)",
    )
    prs.add_argument(
        AP.PFX.format(AP.FAST),
        "-f",
        action="store_true",
        help="Run only 'fast' tests",
    )
    prs.add_argument(
        AP.PFX.format(AP.README),
        action="store_true",
        help="Run only the tests on README.rst",
    )

    # Subgroup for the areas
    for area in (
        AP.LATTICE,
        AP.POLYHEDRA,
        AP.IDEALS,
        AP.TRIANGULATIONS,
        AP.FANS,
        AP.COHOMOLOGY,
        AP.CUTS,
        AP.MATROIDS,
        AP.PHYLO,
        AP.CLI,
    ):
        grp_areas.add_argument(
            AP.PFX.format(area),
            action="store_true",
            help="Run the {} tests".format(area),
        )

    # Return the parser
    return prs


def main():
    import sys
    import unittest as ut

    import toric.test

    # Retrieve the parser
    prs = get_parser()

    # Pull the dict of stored flags, saving the un-consumed args, and
    # update sys.argv
    ns, args_left = prs.parse_known_args()
    params = vars(ns)
    sys.argv = sys.argv[:1] + args_left

    # Create the empty test suite
    ts = ut.TestSuite()

    # Helper function for adding test suites. Just uses ts and params from
    # the main() function scope
    def addsuiteif(suite, flags):
        if any(params[k] for k in flags):
            ts.addTest(suite)

    # Fast tests, per area
    for area, suite in (
        (AP.LATTICE, toric.test.suite_lattice),
        (AP.POLYHEDRA, toric.test.suite_polyhedra),
        (AP.IDEALS, toric.test.suite_ideals),
        (AP.TRIANGULATIONS, toric.test.suite_triangulations),
        (AP.FANS, toric.test.suite_fans),
        (AP.COHOMOLOGY, toric.test.suite_cohomology),
        (AP.CUTS, toric.test.suite_cuts),
        (AP.MATROIDS, toric.test.suite_matroids),
        (AP.PHYLO, toric.test.suite_phylo),
        (AP.CLI, toric.test.suite_cli),
    ):
        addsuiteif(suite(), [AP.ALL, AP.FAST, area])

    # Slow tests
    addsuiteif(toric.test.suite_slow(), [AP.ALL])

    # README tests
    addsuiteif(
        toric.test.suite_doctest_readme(), [AP.ALL, AP.FAST, AP.README]
    )

    # Create the test runner and execute
    ttr = ut.TextTestRunner(buffer=True, verbosity=(2 if params["v"] else 1))
    success = ttr.run(ts).wasSuccessful()

    # Return based on success result (lets tox report success/fail)
    sys.exit(0 if success else 1)


if __name__ == "__main__":
    main()
