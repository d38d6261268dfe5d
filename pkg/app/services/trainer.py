import logging
import time
from dataclasses import dataclass

import numpy as np

from app.core.exceptions import NumericError, TrainingDivergedError
from app.core.models import BinaryAttributedGraph, LatentMatrix, ModelParams
from app.core.schemas import LossWeights, TrainConfig
from app.services.autoencoder import architecture_for, forward, init_params, loss_and_gradients
from app.services.sampler import sample_batch

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class TrainingOutcome:
    """
    Result of a training run.

    Fields:
        latent        — embedding H of every node.
        loss_history  — total loss per iteration.
        parts_history — loss breakdown per iteration.
        params        — final model parameters.
    """
    latent: LatentMatrix
    loss_history: tuple[float, ...]
    parts_history: tuple[dict[str, float], ...]
    params: ModelParams


def _observed(exc: NumericError) -> float:
    return exc.value if exc.value is not None else float("nan")


def embed(params: ModelParams, g: BinaryAttributedGraph, chunk_size: int = 512) -> LatentMatrix:
    """Run the encoder over all nodes in row chunks."""
    blocks = []
    for start in range(0, g.n, chunk_size):
        stop = min(start + chunk_size, g.n)
        h, _, _ = forward(params, g.adjacency[start:stop], g.attributes[start:stop])
        blocks.append(h)
    return LatentMatrix(np.vstack(blocks), g.node_ids)


def train(
    g: BinaryAttributedGraph,
    weights: LossWeights,
    cfg: TrainConfig,
) -> TrainingOutcome:
    """
    Fit the joint autoencoder with plain SGD on sampled batches.

    One RNG seeded with cfg.seed initialises the parameters; a second one,
    derived from the same seed, drives batch sampling. The run is
    deterministic for a fixed graph, weights and config.
    Args:
        g (BinaryAttributedGraph): Training graph.
        weights (LossWeights): Loss weights.
        cfg (TrainConfig): Optimisation and architecture settings.
    Returns:
        TrainingOutcome: Embedding of all nodes, loss history and parameters.
    Raises:
        TrainingDivergedError: If the loss becomes non-finite.
    """
    params = init_params(architecture_for(g, cfg), cfg.seed)
    rng = np.random.default_rng([cfg.seed, 1])
    history: list[float] = []
    parts_history: list[dict[str, float]] = []
    started = time.perf_counter()
    logger.info(
        "Training on %d nodes, %d attributes: %d iterations, batch %d, sampler %s",
        g.n, g.d, cfg.epochs, cfg.batch_size, cfg.sampler,
    )
    for iteration in range(cfg.epochs):
        batch = sample_batch(g, cfg, rng).indices
        try:
            total, parts, grads = loss_and_gradients(
                params, g.adjacency[batch], g.attributes[batch], weights
            )
        except NumericError as exc:
            raise TrainingDivergedError(iteration, _observed(exc), exc.detail) from exc
        params.step(grads, cfg.learning_rate)
        history.append(total)
        parts_history.append(parts)
        if (iteration + 1) % cfg.log_every == 0:
            logger.info("iteration %d/%d loss %.6g", iteration + 1, cfg.epochs, total)
    try:
        latent = embed(params, g, cfg.chunk_size)
    except NumericError as exc:
        raise TrainingDivergedError(cfg.epochs, _observed(exc), exc.detail) from exc
    logger.info("Training finished in %.2fs", time.perf_counter() - started)
    return TrainingOutcome(latent, tuple(history), tuple(parts_history), params)
