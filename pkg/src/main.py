"""Main entry point for the polardim command-line interface."""

import functools
import sys
from pathlib import Path

import click
from pydantic import TypeAdapter, ValidationError
from rich.console import Console
from rich.table import Table

from src import __version__
from src.analysis.polarisation import compare_windows
from src.config import get_settings
from src.data.readers import NetworkFormat, file_digest, read_records
from src.data.writers import write_edge_list
from src.errors import ParseError, PolardimError
from src.models.estimates import (
    DimensionEstimate,
    EntropyReport,
    PolarisationVerdict,
    WindowMeasurement,
)
from src.models.records import DEFAULT_KINDS, InteractionKind, WindowSpec
from src.models.reports import (
    AnalysisReport,
    CompareDocument,
    ReportedWindow,
    SpectrumDocument,
    TableRow,
    VerdictDocument,
    WindowStepDocument,
)
from src.pipeline.analyzer import NetworkAnalyzer, load_network
from src.sbm.experiments import (
    DEFAULT_IN_PROBS,
    DEFAULT_N,
    DEFAULT_OUT_PROB,
    DEFAULT_OUT_PROBS,
    DEFAULT_REPLICATES,
    DEFAULT_SPLITS,
    run_engagement_sweep,
    run_imbalance_sweep,
)
from src.sbm.tables import format_results, mean_d_hat_table, results_frame, summarise_results
from src.spectral.svd import truncated_svd
from src.utils.logger import get_logger, setup_logger
from src.utils.time_utils import parse_window_arg

console = Console(stderr=True)


def exits_on_error(fn):
    """Turn library errors into a diagnostic and the matching exit code."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except PolardimError as e:
            get_logger(__name__).error(f"{type(e).__name__}: {e}")
            console.print(f"[red]Error:[/red] {e}")
            sys.exit(e.exit_code)

    return wrapper


def _log_run(command: str, seed: int | None = None, digest: str | None = None, **options):
    """Record everything needed to reproduce a run."""
    logger = get_logger(__name__)
    logger.info(f"polardim {__version__} :: {command}")
    logger.info(f"Options: {options}")
    logger.info(f"Configuration: {get_settings().as_dict()}")
    if seed is not None:
        logger.info(f"Master seed: {seed}")
    if digest is not None:
        logger.info(f"Input digest: {digest}")


def _emit(document) -> None:
    click.echo(document.model_dump_json(indent=2, by_alias=True))


def _float_list(ctx, param, value):
    if value is None or isinstance(value, tuple):
        return value
    try:
        return tuple(float(v) for v in value.split(",") if v.strip())
    except ValueError as e:
        raise click.BadParameter(f"expected comma-separated numbers, got '{value}'") from e


def _kind_set(ctx, param, value):
    try:
        return frozenset(InteractionKind(v.strip().lower()) for v in value.split(",") if v.strip())
    except ValueError as e:
        raise click.BadParameter(str(e)) from e


def _settings_default(attr: str):
    return lambda: getattr(get_settings(), attr)


k_option = click.option(
    "--k",
    "-k",
    "k",
    type=click.IntRange(min=3),
    default=_settings_default("default_k"),
    show_default="100",
    help="Number of singular values fed to the estimators",
)
format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice([f.value for f in NetworkFormat]),
    default=NetworkFormat.AUTO.value,
    show_default=True,
    help="Input format",
)
directed_option = click.option(
    "--directed/--undirected",
    default=None,
    help="Keep edge direction (default: undirected, or the edge-list header)",
)
seed_option = click.option(
    "--seed",
    type=click.IntRange(min=0),
    default=_settings_default("master_seed"),
    show_default="0",
    help="Master seed",
)
threads_option = click.option(
    "--threads",
    type=click.IntRange(min=1),
    default=_settings_default("threads"),
    show_default="1",
    help="Worker threads for replicate analysis",
)


@click.group()
@click.version_option(version=__version__)
def cli():
    """polardim: polarisation as loss of RDPG embedding dimensionality."""
    # Initialize logger
    setup_logger()


@cli.command()
def config():
    """Display current configuration."""
    settings = get_settings()

    table = Table(title="polardim Configuration")
    table.add_column("Setting", style="cyan", no_wrap=True)
    table.add_column("Value", style="green")
    for key, value in settings.as_dict().items():
        table.add_row(key, str(value))

    console.print(table)


@cli.command()
@click.argument("input_path", type=click.Path(dir_okay=False))
@format_option
@k_option
@directed_option
@click.option("--emit-spectrum", is_flag=True, help="Include the singular values in the report")
@click.option(
    "--dump-network",
    "dump_path",
    type=click.Path(dir_okay=False, writable=True),
    default=None,
    help="Also write the analysed network as an edge list",
)
@exits_on_error
def estimate(input_path, fmt, k, directed, emit_spectrum, dump_path):
    """Estimate d̂ and SVD entropy of a network and of its giant component."""
    digest = _digest(input_path)
    _log_run("estimate", digest=digest, input=input_path, format=fmt, k=k, directed=directed)

    network, _ = load_network(input_path, fmt, directed)
    if dump_path:
        write_edge_list(network, dump_path)
        get_logger(__name__).info(f"Wrote network to {dump_path}")
    analyzer = NetworkAnalyzer(k=k, emit_spectrum=emit_spectrum)
    report, _ = analyzer.analyse(network, digest)
    _emit(report)


@cli.command()
@click.argument("input_path", type=click.Path(dir_okay=False))
@format_option
@k_option
@directed_option
@exits_on_error
def spectrum(input_path, fmt, k, directed):
    """Print the leading singular values of a network."""
    digest = _digest(input_path)
    _log_run("spectrum", digest=digest, input=input_path, format=fmt, k=k, directed=directed)

    network, _ = load_network(input_path, fmt, directed)
    analyzer = NetworkAnalyzer(k=k)
    values = truncated_svd(network, analyzer.resolve_k(network.n_nodes), seed=analyzer.seed)
    _emit(
        SpectrumDocument(
            input_digest=digest,
            directed=network.directed,
            n_nodes=network.n_nodes,
            n_edges=network.n_edges,
            k_requested=k,
            k_used=values.k,
            converged=values.converged,
            values=list(values.values),
        )
    )


@cli.command()
@click.argument("records_path", required=False, type=click.Path(dir_okay=False))
@click.option(
    "--window",
    "-w",
    "window_args",
    multiple=True,
    help="LABEL=START..END (ISO date/datetime or epoch seconds; END exclusive)",
)
@click.option(
    "--kinds",
    default=",".join(sorted(k.value for k in DEFAULT_KINDS)),
    show_default=True,
    callback=_kind_set,
    help="Interaction kinds that create edges",
)
@click.option(
    "--reports",
    "reports_path",
    type=click.Path(dir_okay=False),
    default=None,
    help="JSON list of literal per-window values instead of records",
)
@click.option(
    "--dump-dir",
    type=click.Path(file_okay=False, writable=True),
    default=None,
    help="Also write each window network as an edge list into this directory",
)
@k_option
@directed_option
@exits_on_error
def compare(records_path, window_args, kinds, reports_path, dump_dir, k, directed):
    """Compare d̂ and entropy across time windows."""
    if reports_path:
        document = _compare_reported(reports_path)
    else:
        if not records_path:
            raise click.UsageError("give a RECORDS_PATH or --reports")
        if len(window_args) < 2:
            raise click.UsageError("at least two --window options are required")
        try:
            windows = [
                WindowSpec(label, start, end, include_kinds=kinds)
                for label, start, end in map(parse_window_arg, window_args)
            ]
        except ValueError as e:
            raise click.BadParameter(str(e), param_hint="--window") from e

        digest = _digest(records_path)
        _log_run(
            "compare",
            digest=digest,
            records=records_path,
            windows=list(window_args),
            kinds=sorted(kind.value for kind in kinds),
            k=k,
            directed=directed,
            dump_dir=dump_dir,
        )
        batch = read_records(records_path)
        analyzer = NetworkAnalyzer(k=k)
        reports, verdict = analyzer.analyse_windows(
            batch,
            windows,
            digest,
            directed=bool(directed),
            dump_dir=Path(dump_dir) if dump_dir else None,
        )
        document = CompareDocument(
            k_used=verdict.k_used,
            windows=reports,
            table=[_row_from_report(r) for r in reports],
            verdict=_verdict_document(verdict),
        )

    _print_verdict(document)
    _emit(document)


@cli.command()
@click.argument("input_path", type=click.Path(dir_okay=False))
@format_option
@click.option(
    "--replicates",
    type=click.IntRange(min=1),
    default=_settings_default("bootstrap_replicates"),
    show_default="1000",
    help="Number of bootstrap replicates",
)
@seed_option
@k_option
@threads_option
@directed_option
@click.option(
    "--rows",
    "rows_path",
    type=click.Path(dir_okay=False),
    default=None,
    help="Also write per-replicate rows to this CSV file",
)
@exits_on_error
def bootstrap(input_path, fmt, replicates, seed, k, threads, directed, rows_path):
    """Node-bootstrap the giant component and summarise d̂ and entropy."""
    digest = _digest(input_path)
    _log_run(
        "bootstrap",
        seed=seed,
        digest=digest,
        input=input_path,
        format=fmt,
        replicates=replicates,
        k=k,
        threads=threads,
        directed=directed,
    )

    network, _ = load_network(input_path, fmt, directed)
    analyzer = NetworkAnalyzer(k=k, seed=seed, threads=threads)
    summary, rows = analyzer.bootstrap(network, replicates, digest)
    if rows_path:
        Path(rows_path).write_text(format_results(rows), encoding="utf-8")
    _emit(summary)


@cli.group()
def sbm():
    """Stochastic block model experiment grids."""


def _sbm_options(fn):
    fn = click.option(
        "--output",
        "-o",
        "output_path",
        type=click.Path(dir_okay=False, allow_dash=True),
        default="-",
        show_default=True,
        help="Results table (CSV); '-' for stdout",
    )(fn)
    fn = threads_option(fn)
    fn = seed_option(fn)
    fn = k_option(fn)
    fn = click.option(
        "--replicates",
        type=click.IntRange(min=1),
        default=DEFAULT_REPLICATES,
        show_default=True,
        help="Replicates per configuration",
    )(fn)
    fn = click.option(
        "--n", "n", type=click.IntRange(min=3), default=DEFAULT_N, show_default=True,
        help="Nodes per graph",
    )(fn)
    fn = click.option(
        "--in-probs",
        default=",".join(f"{p:g}" for p in DEFAULT_IN_PROBS),
        show_default=True,
        callback=_float_list,
        help="In-group link probabilities",
    )(fn)
    return fn


@sbm.command()
@click.option(
    "--out-probs",
    default=",".join(f"{p:g}" for p in DEFAULT_OUT_PROBS),
    show_default=True,
    callback=_float_list,
    help="Between-group link probabilities",
)
@_sbm_options
@exits_on_error
def engagement(out_probs, in_probs, n, replicates, k, seed, threads, output_path):
    """Two equal groups; vary in-group and between-group link probabilities."""
    _log_run(
        "sbm engagement",
        seed=seed,
        in_probs=in_probs,
        out_probs=out_probs,
        n=n,
        replicates=replicates,
        k=k,
        threads=threads,
    )
    results = run_engagement_sweep(
        in_probs, out_probs, n=n, replicates=replicates, k=k, seed=seed, threads=threads
    )
    _finish_sweep(results, "out_prob", output_path)


@sbm.command()
@click.option(
    "--out-prob",
    type=click.FloatRange(0.0, 1.0),
    default=DEFAULT_OUT_PROB,
    show_default=True,
    help="Between-group link probability",
)
@click.option(
    "--splits",
    default=",".join(f"{s:g}" for s in DEFAULT_SPLITS),
    show_default=True,
    callback=_float_list,
    help="Minority-group shares of the network",
)
@_sbm_options
@exits_on_error
def imbalance(out_prob, splits, in_probs, n, replicates, k, seed, threads, output_path):
    """Fixed between-group probability; shrink one group to a minority."""
    _log_run(
        "sbm imbalance",
        seed=seed,
        in_probs=in_probs,
        out_prob=out_prob,
        splits=splits,
        n=n,
        replicates=replicates,
        k=k,
        threads=threads,
    )
    results = run_imbalance_sweep(
        in_probs, out_prob, splits, n=n, replicates=replicates, k=k, seed=seed, threads=threads
    )
    _finish_sweep(results, "split", output_path)


def _digest(path: str) -> str:
    try:
        return file_digest(path)
    except OSError as e:
        raise ParseError(f"cannot read input: {e}", path=path) from e


def _finish_sweep(results, columns: str, output_path: str) -> None:
    frame = results_frame(results)
    text = format_results(frame)
    if output_path == "-":
        click.echo(text, nl=False)
    else:
        Path(output_path).write_text(text, encoding="utf-8")
        get_logger(__name__).info(f"Wrote {len(frame)} rows to {output_path}")

    summary = summarise_results(frame)
    table = Table(title="Mean d̂ by configuration")
    headers = (
        "config_id", "replicates", "d_hat_mean", "d_hat_sem", "entropy_mean", "gc_fraction_mean"
    )
    for col in headers:
        table.add_column(col, style="cyan" if col == "config_id" else None)
    for row in summary.itertuples(index=False):
        table.add_row(
            row.config_id,
            str(row.replicates),
            f"{row.d_hat_mean:.2f}",
            f"{row.d_hat_sem:.2f}" if row.replicates > 1 else "-",
            f"{row.entropy_mean:.6f}",
            f"{row.gc_fraction_mean:.3f}",
        )
    console.print(table)
    console.print(mean_d_hat_table(frame, columns).round(2).to_string())


def _compare_reported(reports_path: str) -> CompareDocument:
    """Comparison straight from literal per-window values, e.g. a table from a report."""
    digest = _digest(reports_path)
    _log_run("compare --reports", digest=digest, reports=reports_path)
    try:
        rows = TypeAdapter(list[ReportedWindow]).validate_json(
            Path(reports_path).read_bytes()
        )
    except ValidationError as e:
        raise ParseError(
            f"invalid reports file: {e.error_count()} error(s)", path=reports_path
        ) from e

    try:
        measurements = [
            WindowMeasurement(
                row.label,
                DimensionEstimate.reported(row.d_hat, row.k_used),
                EntropyReport.reported(row.entropy, row.k_used)
                if row.entropy is not None
                else None,
            )
            for row in rows
        ]
    except ValueError as e:
        raise ParseError(str(e), path=reports_path) from e

    verdict = compare_windows(measurements)
    return CompareDocument(
        k_used=verdict.k_used,
        table=[
            TableRow(
                window=row.label,
                dimension=row.d_hat,
                dimension_gc=row.d_hat_gc,
                entropy=row.entropy,
                entropy_gc=row.entropy_gc,
            )
            for row in rows
        ],
        verdict=_verdict_document(verdict),
    )


def _row_from_report(report: AnalysisReport) -> TableRow:
    return TableRow(
        window=report.label or "",
        dimension=report.d_hat,
        dimension_gc=report.d_hat_gc,
        entropy=report.entropy,
        entropy_gc=report.entropy_gc,
    )


def _verdict_document(verdict: PolarisationVerdict) -> VerdictDocument:
    return VerdictDocument(
        verdict=verdict.verdict.value,
        net_delta_d=verdict.net_delta_d,
        monotone=verdict.monotone,
        k_used=verdict.k_used,
        steps=[
            WindowStepDocument(
                from_label=s.from_label,
                to_label=s.to_label,
                delta_d=s.delta_d,
                delta_entropy=s.delta_entropy,
                polarising=s.polarising,
            )
            for s in verdict.steps
        ],
    )


def _print_verdict(document: CompareDocument) -> None:
    colors = {"polarising": "red", "stable": "cyan", "depolarising": "green"}
    color = colors.get(document.verdict.verdict, "white")

    table = Table(title=f"Pointwise estimates (K={document.k_used})")
    for col in ("Window", "Dimension", "Dimension GC", "Entropy", "Entropy GC"):
        table.add_column(col, style="cyan" if col == "Window" else None)
    for row in document.table:
        table.add_row(
            row.window,
            str(row.dimension),
            "-" if row.dimension_gc is None else str(row.dimension_gc),
            "-" if row.entropy is None else f"{row.entropy:.6f}",
            "-" if row.entropy_gc is None else f"{row.entropy_gc:.6f}",
        )
    console.print(table)
    console.print(
        f"Verdict: [{color}]{document.verdict.verdict.upper()}[/{color}] "
        f"(net Δd = {document.verdict.net_delta_d:+d})"
    )


def main():
    """Main entry point."""
    try:
        cli()
    except KeyboardInterrupt:
        console.print("\n\n[yellow]Interrupted by user[/yellow]")
        sys.exit(130)
    except Exception as e:
        console.print(f"\n[red]Error:[/red] {str(e)}")
        logger = get_logger(__name__)
        logger.exception("Unhandled exception in main")
        sys.exit(1)


if __name__ == "__main__":
    main()
