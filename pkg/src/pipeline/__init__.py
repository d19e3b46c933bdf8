"""Network pipeline: windows, giant components, bootstrap replicates, analysis."""

from src.pipeline.analyzer import NetworkAnalyzer, NetworkMeasurement, load_network
from src.pipeline.bootstrap import bootstrap_networks, resample_nodes
from src.pipeline.components import giant_component, giant_component_fraction
from src.pipeline.windows import build_window_network, validate_window_series

__all__ = [
    "build_window_network",
    "validate_window_series",
    "giant_component",
    "giant_component_fraction",
    "bootstrap_networks",
    "resample_nodes",
    "NetworkAnalyzer",
    "NetworkMeasurement",
    "load_network",
]
