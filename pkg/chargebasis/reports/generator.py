"""
Report Generation
=================

Every command produces one report dictionary: command name, tool version,
run configuration, result payload, overall pass flag and, unless running
deterministically, wall-clock timings. Reports are written as JSON, as CSV
tables through pandas, or summarized as markdown.
"""

import io
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

import pandas as pd

from ..utils.config import RunConfig
from ..utils.helpers import to_jsonable

REPORT_SCHEMA_VERSION = 1


class ReportGenerator:
    """
    Report builder and writer.

    Output is sorted and indented so that identical inputs give
    byte-identical files.
    """

    def __init__(self, output_dir: str = "reports", deterministic: bool = False):
        """
        Initialize report generator.

        Args:
            output_dir: Directory for reports given by bare file name
            deterministic: Omit wall-clock timings
        """
        self.output_dir = Path(output_dir)
        self.deterministic = deterministic
        self.logger = logging.getLogger(__name__)

    def build(
        self,
        command: str,
        config: RunConfig,
        result: Any,
        passed: Optional[bool] = None,
        timings: Optional[Dict[str, float]] = None,
    ) -> Dict[str, Any]:
        from .. import __version__

        report: Dict[str, Any] = {
            "schema": REPORT_SCHEMA_VERSION,
            "command": command,
            "version": __version__,
            "config": config.to_dict(),
            "result": result,
        }
        if passed is not None:
            report["pass"] = passed
        if not self.deterministic:
            report["timings"] = {k: round(v, 6) for k, v in (timings or {}).items()}
        return report

    def render_json(self, report: Dict[str, Any]) -> str:
        return json.dumps(to_jsonable(report), indent=2, sort_keys=True) + "\n"

    def render_csv(self, rows: List[Dict[str, Any]]) -> str:
        """One row per record; list values are joined with spaces."""
        flat = [
            {k: " ".join(str(x) for x in v) if isinstance(v, (list, tuple)) else v for k, v in row.items()}
            for row in rows
        ]
        buffer = io.StringIO()
        pd.DataFrame(flat).to_csv(buffer, index=False, lineterminator="\n")
        return buffer.getvalue()

    def render_markdown(self, report: Dict[str, Any]) -> str:
        status = {True: "PASS", False: "FAIL", None: "n/a"}[report.get("pass")]
        lines = [
            f"# chargebasis {report['command']}",
            "",
            f"**Version**: {report['version']}  ",
            f"**Status**: {status}",
            "",
            "## Configuration",
            "",
        ]
        for key, value in sorted(report["config"].items()):
            if value not in (None, {}, False):
                lines.append(f"- **{key}**: {value}")
        if "timings" in report and report["timings"]:
            lines += ["", "## Timings", ""]
            lines += [f"- {k}: {v:.3f}s" for k, v in sorted(report["timings"].items())]
        return "\n".join(lines) + "\n"

    def _resolve(self, path: str) -> Path:
        target = Path(path)
        if target.parent == Path("."):
            target = self.output_dir / target
        target.parent.mkdir(parents=True, exist_ok=True)
        return target

    def write(
        self,
        report: Dict[str, Any],
        path: str,
        output_format: str = "json",
        rows: Optional[List[Dict[str, Any]]] = None,
    ) -> str:
        """
        Write a report to disk.

        Args:
            report: Report from ``build``
            path: Target file; bare names go under ``output_dir``
            output_format: "json" or "csv"; csv needs ``rows``
            rows: Tabular records for csv output

        Returns:
            Path of the written file
        """
        target = self._resolve(path)
        if output_format == "csv" and rows is not None:
            content = self.render_csv(rows)
        else:
            content = self.render_json(report)
        with open(target, "w") as f:
            f.write(content)
        self.logger.info(f"Report written: {target}")
        return str(target)

    def write_summary(self, report: Dict[str, Any], path: str) -> str:
        target = self._resolve(path)
        with open(target, "w") as f:
            f.write(self.render_markdown(report))
        return str(target)
