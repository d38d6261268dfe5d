import numpy as np

from app.core.exceptions import ConfigurationError
from app.core.models import BinaryAttributedGraph, NodeSubset
from app.core.schemas import Sampler, TrainConfig
from app.services.similarity import jaccard_to

SIMILARITY_FLOOR = 0.01


def candidate_weights(g: BinaryAttributedGraph, anchor: int) -> np.ndarray:
    """(1 - Jaccard distance of adjacency rows to the anchor) + floor, for every node."""
    distance = jaccard_to(g.adjacency, g.adjacency[anchor])
    return (1.0 - distance) + SIMILARITY_FLOOR


def sample_batch(g: BinaryAttributedGraph, cfg: TrainConfig, rng: np.random.Generator) -> NodeSubset:
    """
    Sample one training batch.

    The anchor is uniform over all nodes; the remaining batch_size - 1 nodes are
    drawn without replacement from the other nodes, uniformly or with weight
    proportional to adjacency-row similarity to the anchor.
    Args:
        g (BinaryAttributedGraph): Training graph.
        cfg (TrainConfig): Batch size and sampler choice.
        rng (np.random.Generator): Random state, advanced in place.
    Returns:
        NodeSubset: batch_size distinct nodes including the anchor.
    Raises:
        ConfigurationError: If batch_size exceeds the number of nodes.
    """
    if cfg.batch_size > g.n:
        raise ConfigurationError(f"batch size {cfg.batch_size} exceeds the number of nodes {g.n}")
    anchor = int(rng.integers(g.n))
    candidates = np.delete(np.arange(g.n), anchor)
    if cfg.sampler == Sampler.UNIFORM:
        others = rng.choice(candidates, size=cfg.batch_size - 1, replace=False)
    else:
        weights = np.delete(candidate_weights(g, anchor), anchor)
        others = rng.choice(candidates, size=cfg.batch_size - 1, replace=False, p=weights / weights.sum())
    return NodeSubset.of(np.append(others, anchor))
