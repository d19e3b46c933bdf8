"""Profile-likelihood elbow method for the embedding dimension."""

import numpy as np
from scipy.stats import norm

from src.config import get_settings
from src.errors import ParameterError
from src.models.estimates import DimensionEstimate
from src.models.spectrum import SingularSpectrum
from src.utils.logger import get_logger

logger = get_logger(__name__)


def estimate_dimension(
    spectrum: SingularSpectrum,
    k: int | None = None,
    variance_floor: float | None = None,
) -> DimensionEstimate:
    """
    Locate the most likely change point in the sorted singular values.

    For each candidate d in 1..K-1 one Gaussian is fitted to the d largest
    values and one to the remaining K-d, each with its own sample mean and a
    shared maximum-likelihood pooled variance. d̂ maximises the summed
    log-likelihood; ties go to the smallest d.

    ``k`` optionally truncates the spectrum first; d̂ depends on K, so K is
    recorded with the estimate.
    """
    if k is not None:
        spectrum = spectrum.truncate(k)
    values = spectrum.as_array()
    n_values = len(values)
    if n_values < 3:
        raise ParameterError(f"elbow estimation needs at least 3 values, got {n_values}")

    floor = get_settings().variance_floor if variance_floor is None else variance_floor
    peak = float(values.max())
    # Keeps the likelihood finite when a group is constant; scales with the data
    min_var = floor * peak**2 if peak > 0 else floor

    profile = profile_loglik(values, min_var)
    d_hat = int(np.argmax(profile)) + 1

    logger.debug(f"Elbow: K={n_values} d_hat={d_hat} loglik={profile[d_hat - 1]:.6g}")
    return DimensionEstimate(
        d_hat=d_hat, profile_loglik=tuple(profile.tolist()), k_used=n_values
    )


def profile_loglik(values: np.ndarray, min_var: float) -> np.ndarray:
    """Summed two-Gaussian log-likelihood for every split d = 1..K-1."""
    n_values = len(values)
    profile = np.empty(n_values - 1)
    for d in range(1, n_values):
        head, tail = values[:d], values[d:]
        mu_head, mu_tail = head.mean(), tail.mean()
        ss = np.sum((head - mu_head) ** 2) + np.sum((tail - mu_tail) ** 2)
        sd = np.sqrt(max(ss / n_values, min_var))
        profile[d - 1] = (
            norm.logpdf(head, loc=mu_head, scale=sd).sum()
            + norm.logpdf(tail, loc=mu_tail, scale=sd).sum()
        )
    return profile
