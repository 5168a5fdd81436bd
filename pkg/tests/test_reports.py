"""Tests for report serialization in reports.py"""

import json
import os
import tempfile
import unittest

from treecover_lab.harness import VerificationReport, Violation
from treecover_lab.reports import ReportWriter


def sample_reports():
    clean = VerificationReport(
        theorem="half-order",
        family="graphs: connected; connected, n >= 2",
        n_min=2,
        n_max=6,
        graphs_checked=142,
        runtime_seconds=1.23456,
    )
    failing = VerificationReport(
        theorem="edge-bracket",
        family="graphs: connected; connected, m >= 1",
        n_min=2,
        n_max=5,
        graphs_checked=30,
        skipped=1,
        violations=[Violation("Ch", {"T": 2, "edge": [0, 1]})],
        notes=["checked on a patched solver"],
    )
    scan = VerificationReport(
        theorem="triangle-free-conjecture",
        family="graphs: triangle-free; connected, triangle-free",
        n_min=1,
        n_max=6,
        graphs_checked=31,
        violations=[Violation("Es\\o", {"T": 3, "bound": 2})],
        research=True,
    )
    return clean, failing, scan


class TestReportDocument(unittest.TestCase):
    """Test the JSON report document."""

    def test_passed_flag(self):
        """Test that research findings do not fail the document."""
        clean, failing, scan = sample_reports()

        self.assertTrue(ReportWriter.to_document([clean, scan])["passed"])
        self.assertFalse(ReportWriter.to_document([clean, failing])["passed"])

    def test_save_json_creates_directories(self):
        """Test saving a document under a directory that does not exist yet."""
        clean, failing, _ = sample_reports()
        with tempfile.TemporaryDirectory() as workdir:
            path = os.path.join(workdir, "nested", "report.json")

            ReportWriter.save_json(ReportWriter.to_document([clean, failing]), path)

            with open(path, encoding="utf-8") as f:
                document = json.load(f)
        self.assertEqual(len(document["reports"]), 2)
        self.assertEqual(document["reports"][0]["runtime_seconds"], 1.235)
        self.assertEqual(document["reports"][1]["violations"][0]["observed"]["edge"], [0, 1])


class TestSummary(unittest.TestCase):
    """Test the Markdown summary."""

    def test_render_summary(self):
        """Test the header, the table and the per-theorem sections."""
        text = ReportWriter.render_summary(list(sample_reports()))

        self.assertTrue(text.startswith("# Tree cover verification summary"))
        self.assertIn("3 check(s), 203 graph(s) checked, 2 violation(s).", text)
        self.assertIn("| `half-order` |", text)
        self.assertIn("`triangle-free-conjecture` (conjecture)", text)
        self.assertIn("## edge-bracket", text)
        self.assertIn("- note: checked on a patched solver", text)
        self.assertIn("- `Ch`: T=2, edge=[0, 1]", text)
        self.assertNotIn("## half-order", text)

    def test_save_summary(self):
        """Test writing the summary to disk."""
        with tempfile.TemporaryDirectory() as workdir:
            path = os.path.join(workdir, "out", "summary.md")

            ReportWriter.save_summary(list(sample_reports()), path)

            with open(path, encoding="utf-8") as f:
                self.assertIn("## triangle-free-conjecture", f.read())


if __name__ == "__main__":
    unittest.main()
