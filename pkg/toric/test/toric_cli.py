r"""*Command-line and configuration tests for* ``toric`` *test suite*.

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

import contextlib
import io
import json
import unittest as ut

from .toric_base import SuperToric


class SuperCli(SuperToric):
    """Helpers running the console entry point."""

    def run_main(self, *argv):
        """Run ``toric`` with `argv`; return the exit code and stdout."""
        from toric.cli import main

        out = io.StringIO()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(
            io.StringIO()
        ):
            code = main(list(argv))
        return code, out.getvalue()

    def run_json(self, *argv):
        """Run ``toric`` with `argv`; return the exit code and parsed JSON."""
        code, text = self.run_main(*argv)
        return code, json.loads(text)


class TestCommands(ut.TestCase, SuperCli):
    """Successful command runs."""

    def test_ideal_of_cusp(self):
        """Confirm the cusp fixture gives ``x^3 - y^2``."""
        code, out = self.run_json("ideal", "--points", "cusp.json")
        self.assertEqual(code, 0)
        self.assertEqual(out["command"], "ideal")
        self.assertIn("x^3 - y^2", out["result"]["generators"])

    def test_inline_points(self):
        """Confirm points may be given as a JSON string."""
        code, out = self.run_json(
            "ideal", "--points", '{"points": [[1, 0], [1, 1], [1, 2]]}'
        )
        self.assertEqual(code, 0)
        self.assertEqual(len(out["result"]["generators"]), 1)

    def test_class_group(self):
        """Confirm the class group of ℙ² from its fixture."""
        code, out = self.run_json("classgroup", "--fan", "p2.json")
        self.assertEqual(code, 0)
        self.assertEqual(out["result"], {"free_rank": "1", "torsion": []})

    def test_hirzebruch_cohomology(self):
        """Confirm both formulas agree on ``H² = 2``."""
        code, out = self.run_json(
            "cohomology",
            "--fan",
            "hirzebruch2.json",
            "--divisor=-3,-5,0,0",
            "--method",
            "both",
            "--check-box",
        )
        self.assertEqual(code, 0)
        result = out["result"]
        self.assertEqual(
            [result[k] for k in ("H0", "H1", "H2")], ["0", "0", "2"]
        )
        self.assertTrue(result["methods_agree"])
        self.assertTrue(result["box_stable"])

    def test_signed_values_space_separated(self):
        """Confirm negative lists may follow their option as a new word."""
        code, out = self.run_json(
            "cohomology",
            "--fan",
            "hirzebruch2.json",
            "--divisor",
            "-3,-5,0,0",
            "--method",
            "both",
        )
        self.assertEqual(code, 0)
        self.assertEqual(out["result"]["H2"], "2")
        self.assertTrue(out["result"]["methods_agree"])

        code, out = self.run_json(
            "--box", "-3..3", "cohomology", "--fan", "P1", "--divisor", "2,0"
        )
        self.assertEqual(code, 0)
        self.assertEqual(out["result"]["box"], [["-3", "3"]])

    def test_attach_signed_values(self):
        """Confirm only signed options absorb a following negative value."""
        from toric.cli import attach_signed_values

        self.assertEqual(
            attach_signed_values(["--divisor", "-3,-5", "--fan", "P2"]),
            ["--divisor=-3,-5", "--fan", "P2"],
        )
        self.assertEqual(
            attach_signed_values(["--weights", "0,1", "-v"]),
            ["--weights", "0,1", "-v"],
        )
        self.assertEqual(
            attach_signed_values(["--seed", "-1"]), ["--seed", "-1"]
        )

    def test_explicit_box(self):
        """Confirm a global box setting reaches the cohomology command."""
        code, out = self.run_json(
            "--box=-3..3", "cohomology", "--fan", "P1", "--divisor", "2,0"
        )
        self.assertEqual(code, 0)
        self.assertEqual(out["result"]["box"], [["-3", "3"]])
        self.assertEqual(out["result"]["H0"], "3")

    def test_phylo_flows(self):
        """Confirm sixteen flows for ``ℤ₂×ℤ₂`` on three leaves."""
        code, out = self.run_json(
            "phylo", "flows", "--group", "Z2xZ2", "--n", "3"
        )
        self.assertEqual(code, 0)
        self.assertEqual(len(out["result"]["flows"]), 16)

    def test_phylo_connect(self):
        """Confirm the bundled tables are two moves apart."""
        code, out = self.run_json(
            "phylo",
            "connect",
            "--group",
            "Z2",
            "--n",
            "6",
            "--t0",
            "rel_t0.json",
            "--t1",
            "rel_t1.json",
        )
        self.assertEqual(code, 0)
        self.assertTrue(out["result"]["connected"])
        self.assertEqual(out["result"]["moves"], "2")

    def test_four_coloring(self):
        """Confirm K4 gets four distinct colors."""
        code, out = self.run_json("cuts", "fourcolor", "--graph", "k4.json")
        self.assertEqual(code, 0)
        self.assertEqual(
            sorted(out["result"]["coloring"]), ["1", "2", "3", "4"]
        )

    def test_text_output(self):
        """Confirm the text format prints flattened keys."""
        code, text = self.run_main(
            "--format", "text", "classgroup", "--fan", "P2"
        )
        self.assertEqual(code, 0)
        self.assertIn("result.free_rank: 1", text.splitlines())

    def test_json_output_is_stable(self):
        """Confirm re-serializing the output reproduces it exactly."""
        from toric.utils import dumps

        _, text = self.run_main("classgroup", "--fan", "quadric")
        self.assertEqual(dumps(json.loads(text)) + "\n", text)


class TestFailures(ut.TestCase, SuperCli):
    """Exit codes for usage and computation errors."""

    def test_missing_command(self):
        """Confirm running with no command is a usage error."""
        code, text = self.run_main()
        self.assertEqual(code, 2)
        self.assertEqual(text, "")

    def test_missing_option(self):
        """Confirm a missing ``--divisor`` exits with code 2."""
        code, out = self.run_json("cohomology", "--fan", "P2")
        self.assertEqual(code, 2)
        self.assertEqual(out["error"], "UsageError")
        self.assertIn("--divisor", out["message"])

    def test_bad_json(self):
        """Confirm unreadable input exits with code 2."""
        code, out = self.run_json("ideal", "--points", "no-such-file.json")
        self.assertEqual(code, 2)
        self.assertEqual(out["error"], "UsageError")

    def test_bad_field(self):
        """Confirm a non-prime field is rejected before running."""
        code, out = self.run_json(
            "--field", "GF(4)", "classgroup", "--fan", "P2"
        )
        self.assertEqual(code, 2)
        self.assertEqual(out["error"], "UsageError")

    def test_computation_error(self):
        """Confirm a non-Cartier divisor exits with code 1."""
        code, out = self.run_json(
            "cartier", "--fan", "quadric", "--divisor", "1,0"
        )
        self.assertEqual(code, 1)
        self.assertEqual(out["error"], "NotCartier")

    def test_run_unknown_command(self):
        """Confirm :func:`run` refuses unknown commands."""
        from toric import RunConfig
        from toric.cli import run

        out, code = run("nonsense", None, RunConfig())
        self.assertEqual(code, 2)
        self.assertEqual(out["error"], "UsageError")


class TestRunConfig(ut.TestCase, SuperToric):
    """Settings from defaults, files and flags."""

    def test_defaults(self):
        """Confirm the default settings."""
        from toric import QQ, OutputFormat, RunConfig

        config = RunConfig()
        self.assertEqual(config.field, QQ)
        self.assertEqual(config.output, OutputFormat.Json)
        self.assertIsNone(config.box)
        self.assertEqual(config.as_dict()["spair_budget"], 10 ** 6)

    def test_unknown_key(self):
        """Confirm unknown settings are rejected."""
        from toric import RunConfig, UsageError

        self.assertRaises(UsageError, RunConfig.from_dict, {"colour": "red"})

    def test_invalid_budget(self):
        """Confirm budgets must be positive."""
        from toric import RunConfig, UsageError

        self.assertRaises(
            UsageError, RunConfig.from_dict, {"node_budget": 0}
        )

    def test_flags_override_file(self):
        """Confirm non-|None| overrides win over file values."""
        import os
        import tempfile

        from toric import RunConfig

        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "toric.json")
            with open(path, "w") as f:
                json.dump({"field": "GF(2)", "seed": 7}, f)
            config = RunConfig.from_file(path, seed=11, box=None)

        self.assertEqual(config.field.characteristic, 2)
        self.assertEqual(config.seed, 11)
        self.assertIsNone(config.box)

    def test_missing_file(self):
        """Confirm an unreadable configuration file is a usage error."""
        from toric import RunConfig, UsageError

        self.assertRaises(
            UsageError, RunConfig.from_file, "/nonexistent/toric.json"
        )


def suite_cli():
    """Create and return the test suite for the command line."""
    s = ut.TestSuite()
    tl = ut.TestLoader()
    s.addTests(
        [
            tl.loadTestsFromTestCase(TestCommands),
            tl.loadTestsFromTestCase(TestFailures),
            tl.loadTestsFromTestCase(TestRunConfig),
        ]
    )

    return s


if __name__ == "__main__":
    print("Module not executable.")
