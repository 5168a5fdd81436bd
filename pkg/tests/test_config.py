"""Tests for configuration parsing and validation in config.py"""

import os
import tempfile
import unittest

from treecover_lab.config import (
    DEFAULT_CONFIG_FILE,
    BudgetConfig,
    ConfigLoader,
    HarnessConfig,
)


class TestConfigParsing(unittest.TestCase):
    """Test configuration parsing functions."""

    def test_parse_empty_config(self):
        """Test that an empty mapping gives the defaults."""
        result = ConfigLoader._parse_config({})

        self.assertEqual(result.budgets, BudgetConfig())
        self.assertEqual(result.harness, HarnessConfig())
        self.assertEqual(result.budgets.exact_cover_max, 14)
        self.assertIsNone(result.harness.default_n_max)

    def test_parse_budgets(self):
        """Test parsing budget overrides with the rest left at defaults."""
        config_data = {"budgets": {"exact_cover_max": 12, "enumeration_max": 10}}

        result = ConfigLoader._parse_config(config_data)

        self.assertEqual(result.budgets.exact_cover_max, 12)
        self.assertEqual(result.budgets.enumeration_max, 10)
        self.assertEqual(result.budgets.forcing_max, 12)
        self.assertEqual(result.budgets.max_vertices, 64)

    def test_parse_harness(self):
        """Test parsing harness settings and per-theorem limits."""
        config_data = {
            "harness": {
                "workers": 4,
                "default_n_max": 8,
                "theorem_n_max": {"half-order": 9, "k-tree": "12"},
                "theorems": ["half-order", "k-tree"],
                "out": "reports/report.json",
            }
        }

        result = ConfigLoader._parse_config(config_data)

        self.assertEqual(result.harness.workers, 4)
        self.assertEqual(result.harness.theorems, ["half-order", "k-tree"])
        self.assertEqual(result.harness.theorem_n_max, {"half-order": 9, "k-tree": 12})
        self.assertEqual(result.harness.out, "reports/report.json")
        self.assertIsNone(result.harness.summary)

    def test_n_max_for(self):
        """Test the override order for a theorem's n_max."""
        harness = HarnessConfig(default_n_max=6, theorem_n_max={"oracle": 5})
        unset = HarnessConfig()

        self.assertEqual(harness.n_max_for("oracle", 9), 5)
        self.assertEqual(harness.n_max_for("half-order", 9), 6)
        self.assertEqual(unset.n_max_for("half-order", 9), 9)
        self.assertEqual(unset.n_max_for("half-order"), 7)

    def test_load_config_from_file(self):
        """Test loading configuration from YAML file."""
        config_content = """
budgets:
  path_cover_max: 10

harness:
  workers: 2
  theorems: half-order, leaf-invariance
"""

        with tempfile.NamedTemporaryFile(mode="w", suffix=".yaml", delete=False) as f:
            f.write(config_content)
            config_path = f.name

        try:
            result = ConfigLoader.load_config(config_path)

            self.assertEqual(result.budgets.path_cover_max, 10)
            self.assertEqual(result.harness.workers, 2)
            self.assertEqual(result.harness.theorems, ["half-order", "leaf-invariance"])
        finally:
            os.unlink(config_path)

    def test_load_empty_file(self):
        """Test that an empty YAML file gives the defaults."""
        with tempfile.NamedTemporaryFile(mode="w", suffix=".yaml", delete=False) as f:
            config_path = f.name

        try:
            result = ConfigLoader.load_config(config_path)
            self.assertEqual(result.budgets, BudgetConfig())
        finally:
            os.unlink(config_path)

    def test_load_config_file_not_found(self):
        """Test loading non-existent config file raises error."""
        with self.assertRaises(FileNotFoundError):
            ConfigLoader.load_config("/nonexistent/path/config.yaml")

    def test_default_file_in_working_directory(self):
        """Test that treecover-lab.yaml is picked up when no path is given."""
        previous = os.getcwd()
        with tempfile.TemporaryDirectory() as workdir:
            os.chdir(workdir)
            try:
                self.assertEqual(ConfigLoader.load_config().harness.workers, 1)
                with open(DEFAULT_CONFIG_FILE, "w", encoding="utf-8") as f:
                    f.write("harness:\n  workers: 3\n")
                self.assertEqual(ConfigLoader.load_config().harness.workers, 3)
            finally:
                os.chdir(previous)


class TestConfigValidation(unittest.TestCase):
    """Test configuration validation."""

    def test_theorem_string_parsing(self):
        """Test that comma-separated theorem strings are parsed correctly."""
        config_data = {"harness": {"theorems": "half-order, oracle,k-tree"}}

        result = ConfigLoader._parse_config(config_data)

        self.assertEqual(result.harness.theorems, ["half-order", "oracle", "k-tree"])

    def test_rejects_non_mapping(self):
        """Test that a top-level list is rejected."""
        with self.assertRaises(ValueError):
            ConfigLoader._parse_config(["budgets"])

    def test_rejects_oversized_graphs(self):
        """Test that max_vertices is capped at 64."""
        with self.assertRaises(ValueError):
            ConfigLoader._parse_config({"budgets": {"max_vertices": 65}})

    def test_rejects_bad_harness_values(self):
        """Test worker count and theorem_n_max validation."""
        with self.assertRaises(ValueError):
            ConfigLoader._parse_config({"harness": {"workers": 0}})
        with self.assertRaises(ValueError):
            ConfigLoader._parse_config({"harness": {"theorem_n_max": [7]}})


if __name__ == "__main__":
    unittest.main()
