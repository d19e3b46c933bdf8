"""Utility functions and helpers."""

from src.utils.logger import get_logger, setup_logger
from src.utils.seeding import derive_seed, label_key, replicate_rngs
from src.utils.time_utils import format_utc, parse_window_arg, to_utc_seconds

__all__ = [
    # Logger
    "setup_logger",
    "get_logger",
    # Seeds
    "derive_seed",
    "label_key",
    "replicate_rngs",
    # Time utilities
    "to_utc_seconds",
    "format_utc",
    "parse_window_arg",
]
