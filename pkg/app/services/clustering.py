import logging

import numpy as np

from app.core.exceptions import ConfigurationError, DimensionMismatchError
from app.core.models import BinaryAttributedGraph, ClusterResult, LatentMatrix, NodeSubset
from app.core.schemas import ClusterConfig, ClusterRanking
from app.services.dbscan import dbscan
from app.services.graph_metrics import bipartite_density, induced_density
from app.services.reduction import reduce, rescale

logger = logging.getLogger(__name__)


def attribute_support(g: BinaryAttributedGraph, members: NodeSubset, t: float) -> NodeSubset:
    """Attribute columns used by at least a fraction t of `members` (at least one member)."""
    if len(members) == 0:
        return NodeSubset(np.zeros(0, dtype=np.int64))
    usage = np.asarray(g.attributes[members.indices].sum(axis=0)).ravel()
    share = usage / len(members)
    return NodeSubset(np.flatnonzero((share >= t) & (usage > 0)))


def rank_clusters(g: BinaryAttributedGraph, labels: np.ndarray, k: int, t: float) -> ClusterResult:
    """
    Rank DBSCAN clusters by the density of the subgraph they induce.
    Args:
        g (BinaryAttributedGraph): Graph the labels refer to.
        labels (np.ndarray): length-n labels, -1 = noise.
        k (int): Number of clusters kept in `top_k` (>= 1).
        t (float): Density threshold in [0, 1].
    Returns:
        ClusterResult: sizes, densities, ordering, top-k and threshold flags.
    Raises:
        ConfigurationError: If k < 1 or t outside [0, 1].
        DimensionMismatchError: If labels do not cover the graph's nodes.
    """
    if k < 1:
        raise ConfigurationError(f"k must be at least 1, got {k}")
    if not 0.0 <= t <= 1.0:
        raise ConfigurationError(f"t must lie in [0, 1], got {t}")
    labels = np.asarray(labels, dtype=np.int64)
    if labels.shape != (g.n,):
        raise DimensionMismatchError(f"expected {g.n} labels, got {labels.shape}")
    num_clusters = int(labels.max()) + 1 if labels.size and labels.max() >= 0 else 0
    sizes = np.bincount(labels[labels >= 0], minlength=num_clusters)
    densities = np.zeros(num_clusters)
    bipartite = np.zeros(num_clusters)
    supports: list[NodeSubset] = []
    for cluster_id in range(num_clusters):
        members = NodeSubset(np.flatnonzero(labels == cluster_id))
        if len(members) >= 2:
            densities[cluster_id] = induced_density(g, members)
        support = attribute_support(g, members, t)
        if len(members) and len(support):
            bipartite[cluster_id] = bipartite_density(g, members, support)
        supports.append(support)
    ordering = tuple(sorted(range(num_clusters), key=lambda c: (-densities[c], c)))
    return ClusterResult(
        labels=labels,
        cluster_sizes=sizes,
        induced_densities=densities,
        ordering=ordering,
        top_k=ordering[:k],
        above_threshold=densities >= t,
        t=t,
        k=k,
        attribute_support=tuple(supports),
        bipartite_densities=bipartite,
    )


def ranking_entries(g: BinaryAttributedGraph, result: ClusterResult) -> list[ClusterRanking]:
    """Ranking report rows of the top-k clusters, in rank order."""
    return [
        ClusterRanking(
            cluster_id=c,
            size=int(result.cluster_sizes[c]),
            induced_density=float(result.induced_densities[c]),
            above_threshold=bool(result.above_threshold[c]),
            bipartite_density=float(result.bipartite_densities[c]),
            attribute_subset=[g.attribute_names[j] for j in result.attribute_support[c]],
            dense_subblock=result.is_dense_subblock(c),
        )
        for c in result.top_k
    ]


def detect_clusters(g: BinaryAttributedGraph, latent: LatentMatrix, cfg: ClusterConfig) -> ClusterResult:
    """Reduce H, cluster the reduced points and rank the clusters."""
    if cfg.out_dims > latent.dim:
        raise ConfigurationError(f"cannot reduce a {latent.dim}-dimensional embedding to {cfg.out_dims}")
    points = reduce(latent, cfg.out_dims, cfg.reducer)
    if cfg.rescale:
        points = rescale(points)
    labels = dbscan(points, cfg.eps, cfg.min_pts)
    result = rank_clusters(g, labels, cfg.k, cfg.t)
    logger.info(
        "DBSCAN found %d clusters, %d noise points; %d above density %.3f",
        result.num_clusters, int(np.sum(labels < 0)), int(result.above_threshold.sum()), cfg.t,
    )
    return result
