"""
Synthetic graphs and planted dense sub-blocks.

Planted blocks follow a fixed recipe: random disjoint node sets, random
directed edges inside each set, and a per-block hashtag set drawn from the
smoothed and sharpened global hashtag usage, activated at random for the
block's members. Entries are only ever added, never removed.
"""
import logging

import numpy as np

from app.core.exceptions import ConfigurationError
from app.core.models import BinaryAttributedGraph, GroundTruth, NodeSubset
from app.core.schemas import BackgroundSpec, InjectionSpec

logger = logging.getLogger(__name__)

_ROW_CHUNK = 256


def generate_background(spec: BackgroundSpec) -> BinaryAttributedGraph:
    """
    Directed Erdős–Rényi graph with iid attribute activations.
    Node ids are `u0..u{n-1}`, attribute names `#h0..#h{d-1}`.
    """
    rng = np.random.default_rng(spec.seed)
    edges, activations = [], []
    for start in range(0, spec.n, _ROW_CHUNK):
        stop = min(start + _ROW_CHUNK, spec.n)
        rows, cols = np.nonzero(rng.random((stop - start, spec.n)) < spec.edge_p)
        rows += start
        keep = rows != cols
        edges.append(np.column_stack([rows[keep], cols[keep]]))
        rows, cols = np.nonzero(rng.random((stop - start, spec.d)) < spec.attr_p)
        activations.append(np.column_stack([rows + start, cols]))
    graph = BinaryAttributedGraph.from_indices(
        [f"u{i}" for i in range(spec.n)],
        [f"#h{j}" for j in range(spec.d)],
        np.vstack(edges),
        np.vstack(activations),
    )
    logger.info("Generated background: %d nodes, %d edges, %d attributes", graph.n, graph.num_edges, graph.d)
    return graph


def hashtag_distribution(g: BinaryAttributedGraph, smoothing_k: float, sharpen_lambda: float) -> np.ndarray:
    """
    Distribution a planted block draws its hashtags from.

    Usage counts (distinct users per column) get add-k smoothing and are
    normalised to p; the result is sharpened to q proportional to exp(lambda * p).
    """
    counts = np.asarray(g.attributes.sum(axis=0)).ravel()
    smoothed = counts + smoothing_k
    p = smoothed / smoothed.sum()
    logits = sharpen_lambda * p
    q = np.exp(logits - logits.max())
    return q / q.sum()


def check_fits(g: BinaryAttributedGraph, spec: InjectionSpec) -> None:
    """
    Raises:
        ConfigurationError: If the blocks need more nodes or attribute columns than `g` has.
    """
    if spec.num_blocks * spec.block_size > g.n:
        raise ConfigurationError(
            f"{spec.num_blocks} blocks of {spec.block_size} nodes do not fit into {g.n} nodes"
        )
    if spec.hashtags_per_block > g.d:
        raise ConfigurationError(f"{spec.hashtags_per_block} hashtags per block exceed {g.d} attributes")


def inject(g: BinaryAttributedGraph, spec: InjectionSpec) -> tuple[BinaryAttributedGraph, GroundTruth]:
    """
    Plant `spec.num_blocks` dense sub-blocks into `g`.
    Args:
        g (BinaryAttributedGraph): Clean graph (left unchanged).
        spec (InjectionSpec): Block parameters and seed.
    Returns:
        tuple: (graph with planted entries added, ground truth of the blocks).
    Raises:
        ConfigurationError: If the graph has too few nodes or attribute columns.
    """
    check_fits(g, spec)
    rng = np.random.default_rng(spec.seed)
    chosen = rng.permutation(g.n)[: spec.num_blocks * spec.block_size]
    q = hashtag_distribution(g, spec.smoothing_k, spec.sharpen_lambda)
    off_diagonal = ~np.eye(spec.block_size, dtype=bool)

    memberships, block_attributes, new_edges, new_activations = [], [], [], []
    for b in range(spec.num_blocks):
        members = np.sort(chosen[b * spec.block_size:(b + 1) * spec.block_size])
        src, dst = np.nonzero((rng.random((spec.block_size, spec.block_size)) < spec.adj_density) & off_diagonal)
        new_edges.append(np.column_stack([members[src], members[dst]]))
        hashtags = np.sort(rng.choice(g.d, size=spec.hashtags_per_block, replace=False, p=q))
        rows, cols = np.nonzero(rng.random((spec.block_size, spec.hashtags_per_block)) < spec.attr_density)
        new_activations.append(np.column_stack([members[rows], hashtags[cols]]))
        memberships.append(NodeSubset(members))
        block_attributes.append(NodeSubset(hashtags))

    injected = g.with_entries(np.vstack(new_edges), np.vstack(new_activations))
    labels = np.zeros(g.n, dtype=np.int8)
    labels[chosen] = 1
    truth = GroundTruth(labels, tuple(memberships), tuple(block_attributes))
    logger.info(
        "Injected %d blocks of %d nodes (adj %.2f, attr %.2f): %d -> %d edges",
        spec.num_blocks, spec.block_size, spec.adj_density, spec.attr_density, g.num_edges, injected.num_edges,
    )
    return injected, truth
