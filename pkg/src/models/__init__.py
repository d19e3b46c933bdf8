"""Domain models."""

from src.models.embedding import RdpgEmbedding
from src.models.estimates import (
    DimensionEstimate,
    EntropyReport,
    PolarisationVerdict,
    Verdict,
    WindowMeasurement,
    WindowStep,
)
from src.models.experiments import ExperimentGrid, ExperimentResult, SbmConfig
from src.models.graph import SparseAdjacency
from src.models.records import (
    DEFAULT_KINDS,
    InteractionKind,
    InteractionRecord,
    RecordBatch,
    RejectedLine,
    WindowSpec,
)
from src.models.spectrum import SingularSpectrum, SvdFactors

__all__ = [
    # Graphs and spectra
    "SparseAdjacency",
    "SingularSpectrum",
    "SvdFactors",
    "RdpgEmbedding",
    # Estimates
    "DimensionEstimate",
    "EntropyReport",
    "PolarisationVerdict",
    "Verdict",
    "WindowMeasurement",
    "WindowStep",
    # Records
    "DEFAULT_KINDS",
    "InteractionKind",
    "InteractionRecord",
    "RecordBatch",
    "RejectedLine",
    "WindowSpec",
    # Experiments
    "SbmConfig",
    "ExperimentGrid",
    "ExperimentResult",
]
