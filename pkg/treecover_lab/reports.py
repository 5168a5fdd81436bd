"""Writers for verification reports: JSON for machines, Markdown for people."""

import json
import os
from typing import Any, Dict, List, Sequence

from jinja2 import Template

from .harness import VerificationReport


class ReportWriter:
    """Serializes verification reports to JSON and renders the Markdown summary."""

    @staticmethod
    def to_document(reports: Sequence[VerificationReport]) -> Dict[str, Any]:
        return {
            "reports": [r.to_dict() for r in reports],
            "passed": all(r.passed or r.research for r in reports),
        }

    @staticmethod
    def save_json(data: Dict[str, Any], file_path: str) -> None:
        """Save a report document to file."""

        # Ensure directory exists
        directory = os.path.dirname(file_path)
        if directory:
            os.makedirs(directory, exist_ok=True)

        with open(file_path, "w", encoding="utf-8") as f:
            json.dump(data, f, indent=2, sort_keys=False)
            f.write("\n")

    @staticmethod
    def render_summary(reports: Sequence[VerificationReport]) -> str:
        """Render the Markdown summary from the bundled template."""
        template_path = os.path.join(os.path.dirname(__file__), "templates", "summary.md.j2")
        with open(template_path, "r", encoding="utf-8") as f:
            template_content = f.read()

        template = Template(template_content)
        rows: List[Dict[str, Any]] = [r.to_dict() for r in reports]
        return template.render(
            reports=rows,
            total_checked=sum(r.graphs_checked for r in reports),
            total_violations=sum(len(r.violations) for r in reports),
        )

    @staticmethod
    def save_summary(reports: Sequence[VerificationReport], file_path: str) -> None:
        directory = os.path.dirname(file_path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(file_path, "w", encoding="utf-8") as f:
            f.write(ReportWriter.render_summary(reports))
