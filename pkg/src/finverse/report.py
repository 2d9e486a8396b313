"""Check results, reports, and report rendering (text, JSON, CSV, figure)."""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable


@dataclass(frozen=True)
class CheckResult:
    suite: str
    check: str
    instance: str = ""
    status: str = "pass"  # "pass" or "fail"
    witness: str | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def result(suite: str, check: str, instance: str, ok: bool, witness: str | None = None) -> CheckResult:
    return CheckResult(suite, check, instance, "pass" if ok else "fail", None if ok else witness)


class Report:
    """An ordered collection of check results."""

    def __init__(self, results: Iterable[CheckResult] = ()):
        self.results: list[CheckResult] = list(results)

    def add(self, item: CheckResult) -> None:
        self.results.append(item)

    def extend(self, items: Iterable[CheckResult]) -> None:
        self.results.extend(items)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    def counts(self) -> dict[str, tuple[int, int]]:
        """Per-suite (passed, failed) counts, in first-seen suite order."""
        out: dict[str, tuple[int, int]] = {}
        for r in self.results:
            p, f = out.get(r.suite, (0, 0))
            out[r.suite] = (p + r.passed, f + (not r.passed))
        return out

    def to_text(self) -> str:
        lines = []
        for r in self.results:
            line = f"{'PASS' if r.passed else 'FAIL'} {r.suite}:{r.check}"
            if r.instance:
                line += f" [{r.instance}]"
            if r.witness:
                line += f" -- {r.witness}"
            lines.append(line)
        passed = sum(r.passed for r in self.results)
        lines.append(f"{passed}/{len(self.results)} checks passed")
        return "\n".join(lines) + "\n"

    def to_json_obj(self) -> dict:
        return {
            "passed": self.ok,
            "checks": [
                {
                    "suite": r.suite,
                    "check": r.check,
                    "instance": r.instance,
                    "status": r.status,
                    "witness": r.witness,
                }
                for r in self.results
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2, sort_keys=True) + "\n"

    def write_csv(self, path: Path) -> None:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["suite", "check", "instance", "status", "witness"])
            for r in self.results:
                writer.writerow([r.suite, r.check, r.instance, r.status, r.witness or ""])


def write_summary_figure(report: Report, path: Path) -> None:
    """Horizontal bar chart of per-suite pass/fail counts."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    counts = report.counts()
    suites = list(counts)
    passed = [counts[s][0] for s in suites]
    failed = [counts[s][1] for s in suites]
    fig, ax = plt.subplots(figsize=(7, max(1.5, 0.5 * len(suites) + 1)))
    ys = range(len(suites))
    ax.barh(ys, passed, color="#2a9d54", label="pass")
    ax.barh(ys, failed, left=passed, color="#c03127", label="fail")
    ax.set_yticks(list(ys))
    ax.set_yticklabels(suites)
    ax.invert_yaxis()
    ax.set_xlabel("checks")
    ax.set_title("verification summary")
    ax.legend(loc="lower right")
    for y, (p, f) in enumerate(zip(passed, failed)):
        ax.text(p + f, y, f" {p}/{p + f}", va="center", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120, metadata={"Software": None})
    plt.close(fig)


def write_outputs(report: Report, out_dir: str | Path) -> list[Path]:
    """Write report.csv, report.json and summary.png into a directory."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    csv_path = out / "report.csv"
    json_path = out / "report.json"
    png_path = out / "summary.png"
    report.write_csv(csv_path)
    json_path.write_text(report.to_json(), encoding="utf-8")
    write_summary_figure(report, png_path)
    return [csv_path, json_path, png_path]
