"""Engagement and imbalance experiment grids over two-block SBMs."""

from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor

from src.analysis.dimension import estimate_dimension
from src.analysis.entropy import svd_entropy
from src.config import get_settings
from src.errors import ParameterError, UndefinedEntropyError
from src.models.experiments import ExperimentGrid, ExperimentResult, SbmConfig
from src.pipeline.components import giant_component_fraction
from src.sbm.sampler import sample_sbm, validate_config
from src.spectral.svd import truncated_svd
from src.utils.logger import get_logger
from src.utils.seeding import derive_seed, label_key

logger = get_logger(__name__)

DEFAULT_IN_PROBS: tuple[float, ...] = (0.30, 0.35, 0.40, 0.45)
DEFAULT_OUT_PROBS: tuple[float, ...] = (0.01, 0.05, 0.1)
DEFAULT_OUT_PROB: float = 0.05
DEFAULT_SPLITS: tuple[float, ...] = (0.5, 0.2, 0.1, 0.01)
DEFAULT_N: int = 1000
DEFAULT_REPLICATES: int = 100


def _check_probs(name: str, probs: Sequence[float]) -> None:
    bad = [p for p in probs if not 0.0 <= p <= 1.0]
    if bad:
        raise ParameterError(f"{name} must lie in [0, 1], got {bad}")


def _check_counts(n: int, replicates: int, k: int) -> None:
    if n < 3:
        raise ParameterError(f"n must be at least 3, got {n}")
    if replicates < 1:
        raise ParameterError(f"replicates must be positive, got {replicates}")
    if k < 3:
        raise ParameterError(f"k must be at least 3 for the elbow fit, got {k}")


def engagement_grid(
    in_probs: Sequence[float] = DEFAULT_IN_PROBS,
    out_probs: Sequence[float] = DEFAULT_OUT_PROBS,
    n: int = DEFAULT_N,
    replicates: int = DEFAULT_REPLICATES,
    k: int | None = None,
) -> ExperimentGrid:
    """Two equal blocks; every in-group × between-group probability pair."""
    k = get_settings().default_k if k is None else k
    _check_probs("in_probs", in_probs)
    _check_probs("out_probs", out_probs)
    _check_counts(n, replicates, k)

    sizes = (n // 2, n - n // 2)
    configs = tuple(
        SbmConfig.two_block(
            sizes, p_in, p_out, config_id=f"engagement-in{p_in:g}-out{p_out:g}", split=0.5
        )
        for p_in in in_probs
        for p_out in out_probs
    )
    return ExperimentGrid(configs=configs, replicates_per_config=replicates, k_for_elbow=k)


def imbalance_grid(
    in_probs: Sequence[float] = DEFAULT_IN_PROBS,
    out_prob: float = DEFAULT_OUT_PROB,
    splits: Sequence[float] = DEFAULT_SPLITS,
    n: int = DEFAULT_N,
    replicates: int = DEFAULT_REPLICATES,
    k: int | None = None,
) -> ExperimentGrid:
    """
    Two blocks of unequal size; ``split`` is the minority block's share of n.

    A split of 0.01 at n=1000 leaves a minority block of 10 nodes.
    """
    k = get_settings().default_k if k is None else k
    _check_probs("in_probs", in_probs)
    _check_probs("out_prob", [out_prob])
    _check_counts(n, replicates, k)

    configs = []
    for p_in in in_probs:
        for split in splits:
            minority = int(round(split * n))
            if not 0.0 < split < 1.0 or minority < 1 or minority > n - 1:
                raise ParameterError(
                    f"split {split} at n={n} gives a zero-size block"
                )
            configs.append(
                SbmConfig.two_block(
                    (n - minority, minority),
                    p_in,
                    out_prob,
                    config_id=f"imbalance-in{p_in:g}-split{split:g}",
                    split=split,
                )
            )
    return ExperimentGrid(configs=tuple(configs), replicates_per_config=replicates, k_for_elbow=k)


def analyse_replicate(config: SbmConfig, replicate: int, k: int) -> ExperimentResult:
    """
    Sample one graph and measure d̂, entropy and giant-component share on the full graph.

    An edgeless draw keeps its row with no entropy; sparse cells at small n
    produce them now and then.
    """
    a = sample_sbm(config)
    spectrum = truncated_svd(a, min(k, a.n_nodes), seed=config.seed)
    try:
        entropy = svd_entropy(spectrum).entropy
    except UndefinedEntropyError:
        logger.warning(
            f"{config.config_id} replicate {replicate}: sampled graph has no edges; "
            "entropy left empty"
        )
        entropy = None
    return ExperimentResult(
        config_id=config.config_id,
        replicate=replicate,
        d_hat=estimate_dimension(spectrum).d_hat,
        entropy=entropy,
        gc_fraction=giant_component_fraction(a),
        in_prob=config.in_prob,
        out_prob=config.out_prob,
        split=config.split,
    )


def run_grid(grid: ExperimentGrid, seed: int, threads: int = 1) -> list[ExperimentResult]:
    """
    Run every (config, replicate) cell.

    Replicate seeds are derived from (seed, config id, replicate index), so a
    cell draws the same graphs whatever else is in the grid. Results come
    back in (config, replicate) order and the table is the same for any
    thread count.
    """
    for config in grid.configs:
        validate_config(config)

    tasks = [
        (config.with_seed(derive_seed(seed, label_key(config.config_id), r)), r)
        for config in grid.configs
        for r in range(grid.replicates_per_config)
    ]
    logger.info(
        f"Running {len(grid.configs)} configs x {grid.replicates_per_config} replicates "
        f"(K={grid.k_for_elbow}, seed={seed}, threads={threads})"
    )

    def run(task: tuple[SbmConfig, int]) -> ExperimentResult:
        config, r = task
        return analyse_replicate(config, r, grid.k_for_elbow)

    if threads <= 1:
        results = [run(t) for t in tasks]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, tasks))

    logger.info(f"Finished {len(results)} experiment rows")
    return results


def run_engagement_sweep(
    in_probs: Sequence[float] = DEFAULT_IN_PROBS,
    out_probs: Sequence[float] = DEFAULT_OUT_PROBS,
    n: int = DEFAULT_N,
    replicates: int = DEFAULT_REPLICATES,
    k: int | None = None,
    seed: int = 0,
    threads: int = 1,
) -> list[ExperimentResult]:
    """Does more between-group contact raise d̂? Full factorial over in/out probabilities."""
    grid = engagement_grid(in_probs, out_probs, n=n, replicates=replicates, k=k)
    return run_grid(grid, seed=seed, threads=threads)


def run_imbalance_sweep(
    in_probs: Sequence[float] = DEFAULT_IN_PROBS,
    out_prob: float = DEFAULT_OUT_PROB,
    splits: Sequence[float] = DEFAULT_SPLITS,
    n: int = DEFAULT_N,
    replicates: int = DEFAULT_REPLICATES,
    k: int | None = None,
    seed: int = 0,
    threads: int = 1,
) -> list[ExperimentResult]:
    """How does d̂ respond as one group shrinks to a small minority?"""
    grid = imbalance_grid(in_probs, out_prob, splits, n=n, replicates=replicates, k=k)
    return run_grid(grid, seed=seed, threads=threads)
