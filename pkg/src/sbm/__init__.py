"""Stochastic block model experiments."""

from src.sbm.experiments import (
    analyse_replicate,
    engagement_grid,
    imbalance_grid,
    run_engagement_sweep,
    run_grid,
    run_imbalance_sweep,
)
from src.sbm.sampler import sample_sbm, validate_config
from src.sbm.tables import results_frame, summarise_results, write_results

__all__ = [
    "sample_sbm",
    "validate_config",
    "engagement_grid",
    "imbalance_grid",
    "analyse_replicate",
    "run_grid",
    "run_engagement_sweep",
    "run_imbalance_sweep",
    "results_frame",
    "summarise_results",
    "write_results",
]
