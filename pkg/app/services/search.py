"""
Unsupervised hyperparameter selection on graphs with planted dense blocks.

Every trial plants a fresh set of blocks (seed + trial index), samples one
configuration from the search space and scores the full pipeline by F1 on the
planted labels. Trials are independent, so a process pool yields the same
log as a sequential loop.
"""
import logging
import math
import statistics
import time
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from app.core.exceptions import NumericError
from app.core.models import BinaryAttributedGraph
from app.core.schemas import (
    Choice,
    FloatRange,
    InjectionSpec,
    SearchResult,
    SearchSpace,
    SweepRow,
    TrialConfig,
    TrialRecord,
)
from app.services.baseline import baseline_predict, greedy_densest
from app.services.detection import run_detection
from app.services.evaluation import f1_anomaly
from app.services.injection import check_fits, inject

logger = logging.getLogger(__name__)

_SECTIONS: tuple[str, ...] = ("loss", "train", "cluster")


def _sample_param(param: FloatRange | Choice, rng: np.random.Generator) -> int | float | str:
    if isinstance(param, Choice):
        return param.values[int(rng.integers(len(param.values)))]
    if param.log:
        return float(math.exp(rng.uniform(math.log(param.low), math.log(param.high))))
    return float(rng.uniform(param.low, param.high))


def sample_config(space: SearchSpace, base: TrialConfig, rng: np.random.Generator) -> TrialConfig:
    """Draw one configuration; fields absent from the space keep their base value."""
    sections = {}
    for section in _SECTIONS:
        current = getattr(base, section)
        fields = type(current).model_fields
        drawn = {}
        for name, param in getattr(space, section).items():
            value = _sample_param(param, rng)
            # integer fields sampled from a float range
            if fields[name].annotation is int and isinstance(value, float):
                value = int(round(value))
            drawn[name] = value
        sections[section] = type(current).model_validate({**current.model_dump(), **drawn})
    return TrialConfig(**sections)


def fit_to_graph(config: TrialConfig, g: BinaryAttributedGraph) -> TrialConfig:
    """Shrink sampled sizes the graph cannot hold: batches beyond n nodes, reductions wider than H."""
    train, cluster = config.train, config.cluster
    if train.batch_size > g.n:
        logger.info("Batch size %d shrunk to the %d nodes of the graph", train.batch_size, g.n)
        train = train.model_copy(update={"batch_size": g.n})
    if cluster.out_dims > train.latent_dim:
        logger.info("Reduction to %d dims shrunk to latent dim %d", cluster.out_dims, train.latent_dim)
        cluster = cluster.model_copy(update={"out_dims": train.latent_dim})
    return config.model_copy(update={"train": train, "cluster": cluster})


def run_trial(
    g_clean: BinaryAttributedGraph,
    spec: InjectionSpec,
    space: SearchSpace,
    base: TrialConfig,
    seed: int,
    trial: int,
) -> TrialRecord:
    """Inject, sample a config, run the pipeline and score it. Divergence scores 0."""
    trial_seed = seed + trial
    started = time.perf_counter()
    injected, truth = inject(g_clean, spec.model_copy(update={"seed": trial_seed}))
    config = sample_config(space, base, np.random.default_rng(trial_seed))
    config = config.model_copy(update={"train": config.train.model_copy(update={"seed": trial_seed})})
    config = fit_to_graph(config, injected)
    diverged = False
    try:
        f1 = f1_anomaly(run_detection(injected, config).prediction, truth)
    except NumericError as exc:
        logger.warning("Trial %d diverged: %s", trial, exc.detail)
        f1, diverged = 0.0, True
    runtime = time.perf_counter() - started
    logger.info("Trial %d: F1 %.4f (%.1fs)", trial, f1, runtime)
    return TrialRecord(trial=trial, config=config, f1=f1, runtime_s=runtime, diverged=diverged)


def random_search(
    g_clean: BinaryAttributedGraph,
    spec: InjectionSpec,
    space: SearchSpace,
    trials: int,
    seed: int,
    base: TrialConfig | None = None,
    workers: int = 1,
) -> SearchResult:
    """
    Random search of the hyperparameter space, scored by anomaly F1.
    Args:
        g_clean (BinaryAttributedGraph): Graph without planted blocks.
        spec (InjectionSpec): Block parameters; the seed is replaced per trial.
        space (SearchSpace): Ranges and choice lists to sample from.
        trials (int): Number of trials (>= 1).
        seed (int): Base seed; trial i uses seed + i.
        base (TrialConfig | None): Values of fields the space does not cover.
        workers (int): Parallel worker processes.
    Returns:
        SearchResult: Best configuration, its F1 and the trial log.
    Raises:
        ConfigurationError: If the blocks do not fit into the graph.
    """
    check_fits(g_clean, spec)
    base = base or TrialConfig()
    args = [(g_clean, spec, space, base, seed, trial) for trial in range(trials)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(run_trial, *zip(*args)))
    else:
        records = [run_trial(*a) for a in args]
    best = max(records, key=lambda r: (r.f1, -r.trial))
    logger.info("Best trial %d with F1 %.4f", best.trial, best.f1)
    return SearchResult(best_config=best.config, best_f1=best.f1, best_trial=best.trial, trials=records)


def density_sweep(
    g_clean: BinaryAttributedGraph,
    spec: InjectionSpec,
    config: TrialConfig,
    densities: list[float],
    seeds: list[int],
) -> list[SweepRow]:
    """
    Score a fixed configuration and the greedy baseline across injected densities.
    Adjacency and attribute densities are set to the same value, as in the
    benchmark protocol; each cell is the median F1 over `seeds`.
    """
    check_fits(g_clean, spec)
    config = fit_to_graph(config, g_clean)
    rows: list[SweepRow] = []
    for density in densities:
        pipeline_runs, baseline_runs = [], []
        for seed in seeds:
            injected, truth = inject(
                g_clean,
                spec.model_copy(update={"adj_density": density, "attr_density": density, "seed": seed}),
            )
            try:
                pipeline_runs.append(f1_anomaly(run_detection(injected, config).prediction, truth))
            except NumericError as exc:
                logger.warning("Sweep run at density %.2f, seed %d diverged: %s", density, seed, exc.detail)
                pipeline_runs.append(0.0)
            baseline_runs.append(f1_anomaly(baseline_predict(injected, greedy_densest(injected)), truth))
        rows.append(
            SweepRow(
                density=density,
                pipeline_f1=statistics.median(pipeline_runs),
                baseline_f1=statistics.median(baseline_runs),
                pipeline_f1_runs=pipeline_runs,
                baseline_f1_runs=baseline_runs,
            )
        )
        logger.info("Density %.2f: pipeline F1 %.4f, baseline F1 %.4f", density, rows[-1].pipeline_f1, rows[-1].baseline_f1)
    return rows
