"""Report rendering: delimited output plus matplotlib figures on disk."""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .estimator import EvalReport
from .server import AnalysisResult

INDEX_LABELS = {
    "gunning_fog": "Gunning Fog",
    "flesch_reading_ease": "Flesch Reading Ease",
    "coleman_liau": "Coleman-Liau",
    "automated_readability": "Automated Readability",
    "final_result": "Final Result",
}


def write_analysis_report(result: AnalysisResult, out_dir: str | Path) -> list[Path]:
    """Write analysis.csv and a readability bar chart; returns the paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    report = result.readability
    values = {
        "gunning_fog": report.gunning_fog,
        "flesch_reading_ease": report.flesch_reading_ease,
        "coleman_liau": report.coleman_liau,
        "automated_readability": report.automated_readability,
        "final_result": report.final_result,
    }

    csv_path = out / "analysis.csv"
    with open(csv_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["metric", "value"])
        for key, value in values.items():
            writer.writerow([key, f"{value:.4f}"])
        writer.writerow(["story_points", f"{result.story_points:.4f}"])
        writer.writerow(["recommendation_source", result.recommendation.source.value])

    fig_path = out / "readability.png"
    fig, ax = plt.subplots(figsize=(7, 4))
    labels = [INDEX_LABELS[k] for k in values]
    ax.barh(labels, list(values.values()), color="#4878a8")
    ax.set_xlabel("score")
    ax.set_title("Readability indexes")
    ax.invert_yaxis()
    fig.tight_layout()
    fig.savefig(fig_path, dpi=120)
    plt.close(fig)
    return [csv_path, fig_path]


def write_eval_report(report: EvalReport, out_dir: str | Path) -> list[Path]:
    """Write the per-fold MAE table and its bar chart; returns the paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    csv_path = out / "cv_mae.csv"
    with open(csv_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["fold", "mae"])
        for i, mae in enumerate(report.fold_mae, start=1):
            writer.writerow([i, f"{mae:.4f}"])
        writer.writerow(["mean", f"{report.mean_mae:.4f}"])
        writer.writerow(["baseline", f"{report.baseline_mae:.4f}"])

    fig_path = out / "cv_mae.png"
    fig, ax = plt.subplots(figsize=(7, 4))
    folds = [str(i) for i in range(1, len(report.fold_mae) + 1)]
    ax.bar(folds, report.fold_mae, color="#4878a8", label="fold MAE")
    ax.axhline(report.mean_mae, color="#2d5d2a", linestyle="--", label="mean MAE")
    ax.axhline(report.baseline_mae, color="#a84848", linestyle=":", label="predict-the-mean baseline")
    ax.set_xlabel("fold")
    ax.set_ylabel("MAE (story points)")
    ax.set_title(f"{report.fold_count}-fold cross-validation (seed {report.seed})")
    ax.legend()
    fig.tight_layout()
    fig.savefig(fig_path, dpi=120)
    plt.close(fig)
    return [csv_path, fig_path]
