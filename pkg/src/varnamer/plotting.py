"""File reports for ``evaluate`` and ``analyze``: JSON, per-instance CSV and a PNG chart."""

from __future__ import annotations

import csv
import json
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .evaluation import CONTEXTS, ContextHitReport, EvalReport  # noqa: E402


def _write_json(path: Path, payload: dict) -> None:
    path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")


def write_eval_report(report: EvalReport, out_dir: str | Path) -> list[Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = [out / "report.json", out / "instances.csv", out / "metrics.png"]
    _write_json(paths[0], report.to_json())
    with open(paths[1], "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=["id", "ground_truth", "name", "source", "exact"])
        writer.writeheader()
        writer.writerows(report.records)

    fig, (left, right) = plt.subplots(1, 2, figsize=(9, 3.5))
    counts = [report.total_cases, report.recommendations, report.exact_matches]
    left.bar(["cases", "recommended", "exact"], counts, color=["#888888", "#4c72b0", "#55a868"])
    left.set_title("counts")
    right.bar(["EM precision", "EM coverage"], [report.em_precision, report.em_coverage],
              color=["#4c72b0", "#55a868"])
    right.set_ylim(0, 1)
    right.set_title("exact match")
    fig.tight_layout()
    fig.savefig(paths[2], dpi=100)
    plt.close(fig)
    return paths


def write_context_report(report: ContextHitReport, out_dir: str | Path) -> list[Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = [out / "report.json", out / "instances.csv", out / "contexts.png"]
    _write_json(paths[0], report.to_json())
    names = list(report.contexts)
    with open(paths[1], "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["id", "name"] + [f"{c}_hits" for c in CONTEXTS] + [f"{c}_exact" for c in names])
        for ic in report.instances:
            writer.writerow([ic.id, ic.name]
                            + [" ".join(map(str, ic.hits[c])) for c in CONTEXTS]
                            + [int(ic.exact[c]) for c in names])

    fig, ax = plt.subplots(figsize=(8, 3.5))
    xs = range(len(names))
    ax.bar([x - 0.2 for x in xs], [report.contexts[c].hitting_rate for c in names], 0.4,
           label="sub-token hitting rate")
    ax.bar([x + 0.2 for x in xs], [report.contexts[c].exact_match_rate for c in names], 0.4,
           label="exact match rate")
    ax.set_xticks(list(xs))
    ax.set_xticklabels([c.replace("_", " ") for c in names])
    ax.set_ylim(0, 1)
    ax.legend()
    fig.tight_layout()
    fig.savefig(paths[2], dpi=100)
    plt.close(fig)
    return paths
