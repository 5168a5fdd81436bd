"""Tests for the treecover-lab command line in cli.py"""

import json
import os
import tempfile
import unittest
from unittest.mock import patch

from click.testing import CliRunner

from treecover_lab import __version__
from treecover_lab.cli import cli
from treecover_lab.formats import parse_edge_list, parse_graph6
from treecover_lab.harness import VerificationReport, Violation


class CliTestCase(unittest.TestCase):
    def setUp(self):
        self.runner = CliRunner()
        self.workdir = tempfile.TemporaryDirectory()
        self.addCleanup(self.workdir.cleanup)

    def path(self, name):
        return os.path.join(self.workdir.name, name)

    def write(self, name, content):
        with open(self.path(name), "w", encoding="utf-8") as f:
            f.write(content)
        return self.path(name)


class TestCompute(CliTestCase):
    """Test the compute command."""

    def test_graph6_input(self):
        """Test T and Z+ of C5 given as graph6."""
        result = self.runner.invoke(cli, ["compute", "--graph6", "Dhc", "--params", "T,Zplus"])

        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(json.loads(result.output), {"T": 2, "Zplus": 2})

    def test_edge_list_input(self):
        """Test the default parameters on an edge list file."""
        edges = self.write("k4.txt", "4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")

        result = self.runner.invoke(cli, ["compute", "--edges", edges])

        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(json.loads(result.output), {"n": 4, "m": 6, "T": 2})

    def test_needs_exactly_one_input(self):
        """Test that zero or two inputs are usage errors."""
        edges = self.write("p2.txt", "2\n0 1\n")

        neither = self.runner.invoke(cli, ["compute"])
        both = self.runner.invoke(cli, ["compute", "--graph6", "A_", "--edges", edges])

        self.assertEqual(neither.exit_code, 1)
        self.assertEqual(both.exit_code, 1)

    def test_parse_error(self):
        """Test that malformed graph6 exits with status 1."""
        result = self.runner.invoke(cli, ["compute", "--graph6", "B!"])

        self.assertEqual(result.exit_code, 1)
        self.assertIn("Error:", result.output)

    def test_missing_edge_file(self):
        """Test that an unreadable edge list is reported."""
        result = self.runner.invoke(cli, ["compute", "--edges", self.path("missing.txt")])

        self.assertEqual(result.exit_code, 1)

    def test_unknown_parameter(self):
        """Test that an unknown parameter exits with status 1."""
        result = self.runner.invoke(cli, ["compute", "--graph6", "Bw", "--params", "T,colour"])

        self.assertEqual(result.exit_code, 1)
        self.assertIn("colour", result.output)

    def test_budget_exceeded(self):
        """Test that a solver past its budget exits with status 2."""
        path = "13\n" + "".join(f"{i} {i + 1}\n" for i in range(12))
        edges = self.write("p13.txt", path)

        result = self.runner.invoke(cli, ["compute", "--edges", edges, "--params", "Z"])

        self.assertEqual(result.exit_code, 2)
        self.assertIn("exceeds the supported limit", result.output)


class TestVerify(CliTestCase):
    """Test the verify command."""

    def test_passing_run_writes_reports(self):
        """Test a small run with JSON and Markdown output."""
        out = self.path("reports/report.json")
        summary = self.path("reports/summary.md")

        result = self.runner.invoke(
            cli,
            ["verify", "--theorems", "oracle,leaf-invariance", "--nmax", "5",
             "--out", out, "--summary", summary],
        )

        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("All 2 theorem(s) verified.", result.output)
        with open(out, encoding="utf-8") as f:
            document = json.load(f)
        self.assertTrue(document["passed"])
        self.assertEqual([r["theorem"] for r in document["reports"]], ["oracle", "leaf-invariance"])
        self.assertTrue(os.path.exists(summary))

    def test_unknown_theorem(self):
        """Test that an unknown theorem id exits with status 1."""
        result = self.runner.invoke(cli, ["verify", "--theorems", "nope"])

        self.assertEqual(result.exit_code, 1)
        self.assertIn("nope", result.output)

    def test_invalid_nmax(self):
        """Test that option validation errors exit with status 1."""
        result = self.runner.invoke(cli, ["verify", "--theorems", "oracle", "--nmax", "0"])

        self.assertEqual(result.exit_code, 1)

    def test_enumeration_budget(self):
        """Test that enumerating past the budget exits with status 2."""
        result = self.runner.invoke(cli, ["verify", "--theorems", "oracle", "--nmax", "10"])

        self.assertEqual(result.exit_code, 2)

    def test_violation_exit_code(self):
        """Test that a violation exits with status 3 and is still saved."""
        failing = VerificationReport(
            theorem="oracle",
            family="graphs: connected; connected",
            n_min=1,
            n_max=3,
            graphs_checked=4,
            violations=[Violation("Bw", {"direct": 2, "reduced": 2, "bruteforce": 1})],
        )
        out = self.path("report.json")

        with patch("treecover_lab.cli.run_theorem", return_value=failing):
            result = self.runner.invoke(
                cli, ["verify", "--theorems", "oracle", "--nmax", "3", "--out", out]
            )

        self.assertEqual(result.exit_code, 3)
        self.assertIn("Violations found for: oracle", result.output)
        with open(out, encoding="utf-8") as f:
            document = json.load(f)
        self.assertFalse(document["passed"])
        self.assertEqual(document["reports"][0]["violations"][0]["graph6"], "Bw")

    def test_theorems_from_config(self):
        """Test that the theorem selection and output path come from the config."""
        out = self.path("from-config.json")
        config = self.write(
            "lab.yaml", f"harness:\n  theorems: oracle\n  default_n_max: 4\n  out: {out}\n"
        )

        result = self.runner.invoke(cli, ["--config", config, "verify", "--nmax", "4"])

        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("All 1 theorem(s) verified.", result.output)
        self.assertTrue(os.path.exists(out))


class TestScanGenAndTheorems(CliTestCase):
    """Test the scan, gen and theorems commands."""

    def test_scan(self):
        """Test a small triangle-free scan."""
        out = self.path("scan.json")

        result = self.runner.invoke(cli, ["scan", "--family", "triangle-free", "--nmax", "5", "--out", out])

        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("triangle-free-conjecture", result.output)
        with open(out, encoding="utf-8") as f:
            self.assertTrue(json.load(f)["reports"][0]["research"])

    def test_gen_graph6(self):
        """Test generating one triangle as graph6."""
        result = self.runner.invoke(cli, ["gen", "--family", "F", "--blocks", "1"])

        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(result.output.strip(), "Bw")

    def test_gen_families(self):
        """Test the orders of generated graphs."""
        cases = [
            (["--family", "friendship", "-k", "3"], 7),
            (["--family", "ktree", "-k", "3", "-n", "9", "--seed", "5"], 9),
            (["--family", "cycle-triangle", "--r", "5"], 10),
            (["--family", "even-extremal", "--case", "2", "--blocks", "2"], 8),
            (["--family", "even-extremal", "--case", "3", "--core", "K4minusE", "--triangles", "1"], 6),
        ]
        for args, order in cases:
            result = self.runner.invoke(cli, ["gen"] + args)
            self.assertEqual(result.exit_code, 0, result.output)
            self.assertEqual(parse_graph6(result.output.strip()).n, order, args)

    def test_gen_edge_list(self):
        """Test edge list output."""
        result = self.runner.invoke(cli, ["gen", "--family", "friendship", "-k", "2", "--format", "edges"])

        self.assertEqual(result.exit_code, 0, result.output)
        g = parse_edge_list(result.output)
        self.assertEqual((g.n, g.m), (5, 6))

    def test_gen_precondition(self):
        """Test that an invalid generator argument exits with status 1."""
        result = self.runner.invoke(cli, ["gen", "--family", "ktree", "-k", "3", "-n", "2"])

        self.assertEqual(result.exit_code, 1)
        self.assertIn("Error:", result.output)

    def test_theorems_listing(self):
        """Test that every theorem id is listed."""
        result = self.runner.invoke(cli, ["theorems"])

        self.assertEqual(result.exit_code, 0)
        self.assertIn("half-order:", result.output)
        self.assertIn("k-tree:", result.output)
        self.assertIn("note:", result.output)

    def test_version(self):
        """Test the version option."""
        result = self.runner.invoke(cli, ["--version"])

        self.assertEqual(result.exit_code, 0)
        self.assertIn(__version__, result.output)

    def test_missing_config(self):
        """Test that an explicit missing config file is reported."""
        result = self.runner.invoke(cli, ["--config", self.path("none.yaml"), "theorems"])

        self.assertEqual(result.exit_code, 1)
        self.assertIn("Invalid configuration", result.output)


if __name__ == "__main__":
    unittest.main()
