"""Pielou-normalised SVD entropy."""

import numpy as np
from scipy.stats import entropy as shannon_entropy

from src.errors import ParameterError, UndefinedEntropyError
from src.models.estimates import EntropyReport
from src.models.spectrum import SingularSpectrum


def svd_entropy(spectrum: SingularSpectrum, k: int | None = None) -> EntropyReport:
    """
    J = -(ln K)⁻¹ Σ sᵢ ln sᵢ with sᵢ = σᵢ / Σⱼ σⱼ over the K values supplied.

    The normaliser is the nuclear norm of the truncated spectrum, so the sᵢ
    form a probability vector and J lies in [0, 1]. 0·ln 0 is taken as 0.
    """
    if k is not None:
        spectrum = spectrum.truncate(k)
    values = spectrum.as_array()
    n_values = len(values)
    if n_values < 2:
        raise ParameterError(f"SVD entropy needs at least 2 values, got {n_values}")

    normaliser = float(values.sum())
    if normaliser <= 0:
        raise UndefinedEntropyError("SVD entropy is undefined for an all-zero spectrum")

    positive = values[values > 0]
    if len(positive) == 1:
        j = 0.0
    elif len(positive) == n_values and np.all(positive == positive[0]):
        j = 1.0
    else:
        j = float(shannon_entropy(values) / np.log(n_values))
        j = min(max(j, 0.0), 1.0)

    return EntropyReport(entropy=j, normaliser=normaliser, k_used=n_values)
