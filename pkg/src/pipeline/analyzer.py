"""Network analysis: the estimators applied to whole networks and their giant components."""

import re
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import pandas as pd

from src.analysis.dimension import estimate_dimension
from src.analysis.entropy import svd_entropy
from src.analysis.polarisation import compare_windows
from src.config import get_settings
from src.data.readers import NetworkFormat, detect_format, read_edge_list, read_records
from src.data.writers import write_edge_list
from src.errors import InputError
from src.models.estimates import (
    DimensionEstimate,
    EntropyReport,
    PolarisationVerdict,
    WindowMeasurement,
)
from src.models.graph import SparseAdjacency
from src.models.records import RecordBatch, WindowSpec
from src.models.reports import AnalysisReport, BootstrapSummary, QuantileSummary
from src.models.spectrum import SingularSpectrum
from src.pipeline.bootstrap import resample_nodes
from src.pipeline.components import giant_component
from src.pipeline.windows import build_window_network, validate_window_series
from src.spectral.svd import truncated_svd
from src.utils.logger import get_logger
from src.utils.seeding import replicate_rngs

QUANTILES = (0.0, 0.025, 0.25, 0.5, 0.75, 0.975, 1.0)

MIN_NODES = 3


@dataclass(frozen=True)
class NetworkMeasurement:
    """Spectrum, embedding dimension and entropy of one network."""

    spectrum: SingularSpectrum
    dimension: DimensionEstimate
    entropy: EntropyReport


def load_network(
    path: str | Path,
    fmt: NetworkFormat | str = NetworkFormat.AUTO,
    directed: bool | None = None,
) -> tuple[SparseAdjacency, RecordBatch | None]:
    """Read an edge list, or build one network from every included record in a records file."""
    fmt = NetworkFormat(fmt)
    if fmt is NetworkFormat.AUTO:
        fmt = detect_format(path)

    if fmt is NetworkFormat.EDGES:
        return read_edge_list(path, directed=directed), None

    batch = read_records(path)
    span = batch.span()
    if span is None:
        raise InputError(f"{path}: no valid records")
    window = WindowSpec(label="all", start=span[0], end=span[1] + 1.0)
    return build_window_network(batch.records, window, directed=bool(directed)), batch


class NetworkAnalyzer:
    """Apply the estimators to networks with a fixed K and seed."""

    def __init__(
        self,
        k: int | None = None,
        seed: int | None = None,
        threads: int | None = None,
        emit_spectrum: bool = False,
    ):
        settings = get_settings()
        self.logger = get_logger(__name__)
        self.k = settings.default_k if k is None else k
        self.seed = settings.master_seed if seed is None else seed
        self.threads = max(1, settings.threads if threads is None else threads)
        self.emit_spectrum = emit_spectrum
        self.settings = settings

    def resolve_k(self, n_nodes: int, subject: str = "network") -> int:
        """K actually usable on ``n_nodes`` nodes; clamps with a warning."""
        if n_nodes < MIN_NODES:
            raise InputError(f"{subject} has {n_nodes} nodes; at least {MIN_NODES} are needed")
        if self.k > n_nodes:
            self.logger.warning(f"k={self.k} exceeds {n_nodes} nodes; clamping to {n_nodes}")
            return n_nodes
        return self.k

    def measure(self, a: SparseAdjacency, k: int | None = None) -> NetworkMeasurement:
        k = self.resolve_k(a.n_nodes) if k is None else k
        spectrum = truncated_svd(a, k, seed=self.seed)
        if not spectrum.converged:
            self.logger.warning("Spectrum computed by the fallback solver (converged=false)")
        return NetworkMeasurement(
            spectrum=spectrum,
            dimension=estimate_dimension(spectrum),
            entropy=svd_entropy(spectrum),
        )

    def analyse(
        self,
        a: SparseAdjacency,
        input_digest: str,
        label: str | None = None,
        k: int | None = None,
    ) -> tuple[AnalysisReport, NetworkMeasurement]:
        """Estimates for the full network and its giant component."""
        full = self.measure(a, k)
        giant = giant_component(a)
        fraction = giant.n_nodes / a.n_nodes
        if fraction < self.settings.gc_warn_fraction:
            self.logger.warning(
                f"Giant component holds only {fraction:.1%} of {a.n_nodes} nodes"
            )
        subject = f"giant component of {label}" if label else "giant component"
        gc = self.measure(giant, min(full.spectrum.k, self.resolve_k(giant.n_nodes, subject)))

        report = AnalysisReport(
            label=label,
            input_digest=input_digest,
            directed=a.directed,
            n_nodes=a.n_nodes,
            n_edges=a.n_edges,
            giant_nodes=giant.n_nodes,
            giant_edges=giant.n_edges,
            k_requested=self.k,
            k_used=full.spectrum.k,
            k_used_gc=gc.spectrum.k,
            d_hat=full.dimension.d_hat,
            d_hat_gc=gc.dimension.d_hat,
            entropy=full.entropy.entropy,
            entropy_gc=gc.entropy.entropy,
            converged=full.spectrum.converged and gc.spectrum.converged,
            spectrum=list(full.spectrum.values) if self.emit_spectrum else None,
        )
        self.logger.info(
            f"{label or 'network'}: n={a.n_nodes} d_hat={report.d_hat} "
            f"d_hat_gc={report.d_hat_gc} J={report.entropy:.6f} (K={report.k_used})"
        )
        return report, full

    def analyse_windows(
        self,
        batch: RecordBatch,
        windows: Sequence[WindowSpec],
        input_digest: str,
        directed: bool = False,
        dump_dir: Path | None = None,
    ) -> tuple[list[AnalysisReport], PolarisationVerdict]:
        """
        Chronologically ordered window reports and their comparison.

        With ``dump_dir`` each window network is also written there as an
        edge list named after the window label.
        """
        ordered = validate_window_series(windows)
        networks = [
            build_window_network(batch.records, window, directed=directed) for window in ordered
        ]
        if dump_dir is not None:
            dump_windows(ordered, networks, dump_dir)
        # One K for every window so the estimates stay comparable
        k = min(
            self.resolve_k(net.n_nodes, f"window '{window.label}'")
            for window, net in zip(ordered, networks)
        )

        reports, measurements = [], []
        for window, network in zip(ordered, networks):
            report, full = self.analyse(network, input_digest, label=window.label, k=k)
            reports.append(report)
            measurements.append(
                WindowMeasurement(window.label, full.dimension, full.entropy)
            )
        return reports, compare_windows(measurements)

    def bootstrap(
        self, a: SparseAdjacency, replicates: int, input_digest: str
    ) -> tuple[BootstrapSummary, pd.DataFrame]:
        """
        Node bootstrap of the giant component.

        Replicates are analysed on ``threads`` workers; rows come back in
        replicate order whatever the completion order.
        """
        giant = giant_component(a)
        fraction = giant.n_nodes / a.n_nodes
        if fraction < self.settings.gc_warn_fraction:
            self.logger.warning(
                f"Giant component is a small fraction ({fraction:.1%}) of the network; "
                "bootstrap replicates describe only that component"
            )
        k = self.resolve_k(
            giant.n_nodes, f"giant component ({fraction:.1%} of {a.n_nodes} nodes)"
        )
        point = self.measure(giant, k)
        rngs = replicate_rngs(self.seed, replicates)

        def run(index: int) -> dict[str, object]:
            replicate = resample_nodes(giant, rngs[index])
            if replicate.is_empty:
                return {"replicate": index, "d_hat": None, "entropy": None, "n_edges": 0}
            m = self.measure(replicate, k)
            return {
                "replicate": index,
                "d_hat": m.dimension.d_hat,
                "entropy": m.entropy.entropy,
                "n_edges": replicate.n_edges,
            }

        self.logger.info(
            f"Bootstrapping {replicates} replicates of {giant.n_nodes} nodes "
            f"(K={k}, seed={self.seed}, threads={self.threads})"
        )
        if self.threads == 1:
            rows = [run(i) for i in range(replicates)]
        else:
            with ThreadPoolExecutor(max_workers=self.threads) as pool:
                rows = list(pool.map(run, range(replicates)))

        frame = pd.DataFrame(rows, columns=["replicate", "d_hat", "entropy", "n_edges"])
        frame["d_hat"] = frame["d_hat"].astype("Int64")
        skipped = int(frame["d_hat"].isna().sum())
        if skipped:
            self.logger.warning(f"{skipped} replicate(s) had no edges and were skipped")
        valid = frame.dropna(subset=["d_hat"])
        if valid.empty:
            raise InputError("every bootstrap replicate was edgeless")

        summary = BootstrapSummary(
            input_digest=input_digest,
            seed=self.seed,
            replicates=replicates,
            k_requested=self.k,
            k_used=k,
            n_nodes=a.n_nodes,
            giant_nodes=giant.n_nodes,
            gc_fraction=fraction,
            point_d_hat=point.dimension.d_hat,
            point_entropy=point.entropy.entropy,
            d_hat=_quantiles(valid["d_hat"].astype(float)),
            entropy=_quantiles(valid["entropy"].astype(float)),
        )
        return summary, frame


def window_file_name(label: str) -> str:
    return re.sub(r"[^\w.-]+", "_", label).strip("_") + ".tsv"


def dump_windows(
    windows: Sequence[WindowSpec], networks: Sequence[SparseAdjacency], directory: Path
) -> list[Path]:
    """Write each window network to ``directory`` as an edge list."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for window, network in zip(windows, networks):
        path = directory / window_file_name(window.label)
        write_edge_list(network, path)
        paths.append(path)
    get_logger(__name__).info(f"Wrote {len(paths)} window network(s) to {directory}")
    return paths


def _quantiles(series: pd.Series) -> QuantileSummary:
    q = series.quantile(list(QUANTILES)).to_numpy(dtype=float)
    q = np.round(q, 12)
    return QuantileSummary(
        minimum=q[0], q2_5=q[1], q25=q[2], median=q[3], q75=q[4], q97_5=q[5], maximum=q[6]
    )
