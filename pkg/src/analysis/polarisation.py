"""Comparison of estimates across time windows."""

from collections.abc import Sequence

from src.errors import ComparabilityError, ParameterError
from src.models.estimates import (
    DimensionEstimate,
    EntropyReport,
    PolarisationVerdict,
    WindowMeasurement,
    WindowStep,
)
from src.utils.logger import get_logger

logger = get_logger(__name__)

WindowInput = (
    WindowMeasurement
    | tuple[str, DimensionEstimate, EntropyReport | None]
    | tuple[str, DimensionEstimate]
)


def compare_windows(reports: Sequence[WindowInput]) -> PolarisationVerdict:
    """
    Pairwise changes of d̂ and entropy over time-ordered windows.

    A step is flagged polarising when d̂ strictly decreases. Entropy deltas
    are carried along as complementary evidence only.
    """
    windows = [_as_measurement(r) for r in reports]
    if len(windows) < 2:
        raise ParameterError(f"need at least 2 windows to compare, got {len(windows)}")

    k_values = {w.dimension.k_used for w in windows}
    k_values |= {w.entropy.k_used for w in windows if w.entropy is not None}
    if len(k_values) != 1:
        raise ComparabilityError(
            f"windows were measured with different K values: {sorted(k_values)}"
        )

    steps = []
    for before, after in zip(windows, windows[1:]):
        delta_d = after.dimension.d_hat - before.dimension.d_hat
        delta_entropy = None
        if before.entropy is not None and after.entropy is not None:
            delta_entropy = after.entropy.entropy - before.entropy.entropy
        steps.append(
            WindowStep(
                from_label=before.label,
                to_label=after.label,
                delta_d=delta_d,
                delta_entropy=delta_entropy,
                polarising=delta_d < 0,
            )
        )

    verdict = PolarisationVerdict(
        labels=tuple(w.label for w in windows),
        d_hats=tuple(w.dimension.d_hat for w in windows),
        entropies=tuple(w.entropy.entropy if w.entropy else None for w in windows),
        k_used=k_values.pop(),
        steps=tuple(steps),
    )
    logger.info(
        f"Windows {' -> '.join(verdict.labels)}: {verdict.verdict.value} "
        f"(net Δd={verdict.net_delta_d:+d})"
    )
    return verdict


def _as_measurement(report: WindowInput) -> WindowMeasurement:
    if isinstance(report, WindowMeasurement):
        return report
    label, dimension, *rest = report
    return WindowMeasurement(label=label, dimension=dimension, entropy=rest[0] if rest else None)
