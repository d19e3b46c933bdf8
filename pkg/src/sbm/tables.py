"""Result tables for experiment runs."""

from collections.abc import Sequence
from pathlib import Path

import pandas as pd

from src.models.experiments import RESULT_COLUMNS, ExperimentResult

FLOAT_FORMAT = "%.10g"


def results_frame(results: Sequence[ExperimentResult]) -> pd.DataFrame:
    """One row per (config, replicate), columns in ``RESULT_COLUMNS`` order."""
    frame = pd.DataFrame([r.row() for r in results], columns=RESULT_COLUMNS)
    # Edgeless replicates carry no entropy
    frame["entropy"] = frame["entropy"].astype(float)
    return frame


def format_results(frame: pd.DataFrame) -> str:
    return frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n")


def write_results(frame: pd.DataFrame, path: str | Path) -> Path:
    path = Path(path)
    path.write_text(format_results(frame), encoding="utf-8")
    return path


def summarise_results(frame: pd.DataFrame) -> pd.DataFrame:
    """Per-config mean, standard deviation and standard error of d̂ and entropy."""
    grouped = frame.groupby("config_id", sort=False)
    summary = grouped.agg(
        in_prob=("in_prob", "first"),
        out_prob=("out_prob", "first"),
        split=("split", "first"),
        replicates=("replicate", "count"),
        d_hat_mean=("d_hat", "mean"),
        d_hat_std=("d_hat", "std"),
        d_hat_sem=("d_hat", "sem"),
        entropy_mean=("entropy", "mean"),
        entropy_std=("entropy", "std"),
        gc_fraction_mean=("gc_fraction", "mean"),
    )
    return summary.reset_index()


def mean_d_hat_table(frame: pd.DataFrame, columns: str) -> pd.DataFrame:
    """Mean d̂ with in-group probability as rows and ``columns`` (out_prob or split) across."""
    return frame.pivot_table(index="in_prob", columns=columns, values="d_hat", aggfunc="mean")
