"""
Per-cluster analyst artifacts: hashtag fingerprints, clustering-coefficient
fingerprints and HITS-annotated cluster summaries.
"""
import logging

import numpy as np

from app.core.exceptions import ConfigurationError, DataError, DegenerateInputError
from app.core.models import BinaryAttributedGraph, ClusterResult, NodeSubset
from app.core.schemas import (
    AuthorityScore,
    ClusteringFingerprint,
    ClusterReport,
    ClusterReportEntry,
    HashtagFingerprint,
    ReferenceSample,
    RunMetadata,
)
from app.services.graph_metrics import clustering_coefficients, hits_scores, induced_density

logger = logging.getLogger(__name__)


def popular_hashtags(g: BinaryAttributedGraph, m: int) -> np.ndarray:
    """Columns of the m most used hashtags by distinct users, ties by column index."""
    if m > g.d:
        raise ConfigurationError(f"cannot take {m} popular hashtags out of {g.d}")
    counts = np.asarray(g.attributes.sum(axis=0)).ravel()
    return np.lexsort((np.arange(g.d), -counts))[:m]


def hashtag_fingerprint(
    g: BinaryAttributedGraph,
    cluster: NodeSubset,
    m: int,
    cluster_id: int = -1,
) -> HashtagFingerprint:
    """
    Share of cluster members using each of the m globally most popular hashtags.
    Raises:
        DataError: If the cluster is empty.
    """
    if len(cluster) == 0:
        raise DataError("hashtag fingerprint of an empty cluster")
    cluster.check_bounds(g.n)
    popular = popular_hashtags(g, m)
    users = np.asarray(g.attributes[cluster.indices][:, popular].sum(axis=0)).ravel()
    return HashtagFingerprint(
        cluster_id=cluster_id,
        hashtag_names=[g.attribute_names[j] for j in popular],
        relative_frequency=(users / len(cluster)).tolist(),
    )


def clustering_fingerprint(
    g: BinaryAttributedGraph,
    cluster: NodeSubset,
    bins: int,
    cluster_id: int = -1,
) -> ClusteringFingerprint:
    """
    Histogram density of clustering coefficients on the cluster-induced subgraph.
    The density integrates to 1 over [0, 1]; the raw coefficients are kept.
    Raises:
        DataError: If the cluster has fewer than 2 nodes.
        ConfigurationError: If bins < 1.
    """
    if len(cluster) < 2:
        raise DataError(f"clustering fingerprint needs at least 2 nodes, got {len(cluster)}")
    if bins < 1:
        raise ConfigurationError(f"bins must be positive, got {bins}")
    coefficients = clustering_coefficients(g.subgraph(cluster))
    density, edges = np.histogram(coefficients, bins=bins, range=(0.0, 1.0), density=True)
    return ClusteringFingerprint(
        cluster_id=cluster_id,
        bin_edges=edges.tolist(),
        density=density.tolist(),
        coefficients=coefficients.tolist(),
    )


def cluster_authority(g: BinaryAttributedGraph, cluster: NodeSubset) -> list[AuthorityScore]:
    """HITS authority of every member on the cluster-induced subgraph (zeros if it has no edges)."""
    sub = g.subgraph(cluster)
    try:
        authority, _ = hits_scores(sub)
    except DegenerateInputError:
        logger.warning("Cluster of %d nodes induces no edges; authority scores set to 0", sub.n)
        authority = np.zeros(sub.n)
    return [AuthorityScore(node_id=node_id, score=float(score)) for node_id, score in zip(sub.node_ids, authority)]


def cluster_edges(g: BinaryAttributedGraph, cluster: NodeSubset) -> list[tuple[str, str]]:
    sub = g.subgraph(cluster)
    return [(sub.node_ids[i], sub.node_ids[j]) for i, j in sub.edge_index_pairs()]


def reference_sample(
    g: BinaryAttributedGraph,
    size: int,
    m: int,
    bins: int,
    seed: int,
) -> ReferenceSample:
    """Fingerprints of `size` users drawn uniformly without replacement."""
    size = min(size, g.n)
    rng = np.random.default_rng(seed)
    sample = NodeSubset.of(rng.choice(g.n, size=size, replace=False))
    return ReferenceSample(
        size=size,
        node_ids=[g.node_ids[i] for i in sample],
        hashtag_fingerprint=hashtag_fingerprint(g, sample, m) if size >= 1 else None,
        clustering_fingerprint=clustering_fingerprint(g, sample, bins) if size >= 2 else None,
    )


def cluster_report(
    g: BinaryAttributedGraph,
    result: ClusterResult,
    m: int,
    bins: int,
    sample_seed: int = 0,
    config_hash: str | None = None,
) -> ClusterReport:
    """
    Report document of the top-k clusters.

    Every entry carries size, induced density, both fingerprints, per-node HITS
    authority on the cluster-induced subgraph and the cluster edge list. A
    random user sample as large as the largest reported cluster is added as
    the reference row.
    """
    m = min(m, g.d)
    entries: list[ClusterReportEntry] = []
    for cluster_id in result.top_k:
        members = result.members(cluster_id)
        if len(members) < 2:
            logger.warning("Skipping cluster %d with %d member(s) in the report", cluster_id, len(members))
            continue
        entries.append(
            ClusterReportEntry(
                id=cluster_id,
                size=len(members),
                density=induced_density(g, members),
                hashtag_fingerprint=hashtag_fingerprint(g, members, m, cluster_id),
                clustering_fingerprint=clustering_fingerprint(g, members, bins, cluster_id),
                authority=cluster_authority(g, members),
                edges=cluster_edges(g, members),
            )
        )
    reference = None
    if entries and m >= 1:
        reference = reference_sample(g, max(e.size for e in entries), m, bins, sample_seed)
    return ClusterReport(
        run_metadata=RunMetadata(
            n=g.n,
            d=g.d,
            num_clusters=result.num_clusters,
            k=result.k,
            t=result.t,
            m=m,
            bins=bins,
            config_hash=config_hash,
        ),
        clusters=entries,
        reference=reference,
    )
