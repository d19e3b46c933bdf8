"""Pydantic schemas for the documents the CLI emits."""

from pydantic import BaseModel, ConfigDict, Field

from src import __version__


class AnalysisReport(BaseModel):
    """Estimates for one network and its giant component."""

    tool_version: str = __version__
    label: str | None = None
    input_digest: str
    directed: bool
    n_nodes: int
    n_edges: int
    giant_nodes: int
    giant_edges: int
    k_requested: int
    k_used: int
    k_used_gc: int
    d_hat: int = Field(ge=1)
    d_hat_gc: int = Field(ge=1)
    entropy: float = Field(ge=0, le=1)
    entropy_gc: float = Field(ge=0, le=1)
    converged: bool = True
    spectrum: list[float] | None = None


class SpectrumDocument(BaseModel):
    """Raw singular spectrum of one network."""

    tool_version: str = __version__
    input_digest: str
    directed: bool
    n_nodes: int
    n_edges: int
    k_requested: int
    k_used: int
    converged: bool
    values: list[float]


class TableRow(BaseModel):
    """One window in the pointwise-estimate table layout."""

    model_config = ConfigDict(populate_by_name=True)

    window: str = Field(serialization_alias="Window")
    dimension: int = Field(serialization_alias="Dimension")
    dimension_gc: int | None = Field(default=None, serialization_alias="Dimension GC")
    entropy: float | None = Field(default=None, serialization_alias="Entropy")
    entropy_gc: float | None = Field(default=None, serialization_alias="Entropy GC")


class WindowStepDocument(BaseModel):
    from_label: str
    to_label: str
    delta_d: int
    delta_entropy: float | None
    polarising: bool


class VerdictDocument(BaseModel):
    verdict: str
    net_delta_d: int
    monotone: bool
    k_used: int
    steps: list[WindowStepDocument]


class CompareDocument(BaseModel):
    """Per-window reports, a table view and the verdict."""

    tool_version: str = __version__
    k_used: int
    windows: list[AnalysisReport] = Field(default_factory=list)
    table: list[TableRow]
    verdict: VerdictDocument


class ReportedWindow(BaseModel):
    """Literal per-window values fed to ``compare --reports``."""

    label: str
    d_hat: int = Field(ge=1)
    k_used: int = Field(ge=2)
    entropy: float | None = Field(default=None, ge=0, le=1)
    d_hat_gc: int | None = None
    entropy_gc: float | None = Field(default=None, ge=0, le=1)


class QuantileSummary(BaseModel):
    """Distribution summary over bootstrap replicates."""

    minimum: float = Field(serialization_alias="min")
    q2_5: float = Field(serialization_alias="2.5%")
    q25: float = Field(serialization_alias="25%")
    median: float = Field(serialization_alias="50%")
    q75: float = Field(serialization_alias="75%")
    q97_5: float = Field(serialization_alias="97.5%")
    maximum: float = Field(serialization_alias="max")


class BootstrapSummary(BaseModel):
    tool_version: str = __version__
    input_digest: str
    seed: int
    replicates: int
    k_requested: int
    k_used: int
    n_nodes: int
    giant_nodes: int
    gc_fraction: float
    point_d_hat: int
    point_entropy: float
    d_hat: QuantileSummary
    entropy: QuantileSummary
