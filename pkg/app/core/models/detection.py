from dataclasses import dataclass, field

import numpy as np

from app.core.exceptions import DataError
from app.core.models.graph import NodeSubset


@dataclass(frozen=True, eq=False)
class ClusterResult:
    """
    DBSCAN labels together with the density ranking of the clusters.

    Fields:
        labels            — length-n labels, -1 = noise, else 0..c-1.
        cluster_sizes     — member count per cluster id.
        induced_densities — induced network density per cluster id (0 for size-1 clusters).
        ordering          — every cluster id, by descending density, ties by smaller id.
        top_k             — the first k entries of `ordering`.
        above_threshold   — per cluster id, whether its density reaches t.
        t                 — density threshold used for the flags.
        k                 — number of clusters requested for `top_k`.
        attribute_support — per cluster id, attribute columns used by at least a fraction t of members.
        bipartite_densities — per cluster id, density of members x attribute_support.
    """
    labels: np.ndarray
    cluster_sizes: np.ndarray
    induced_densities: np.ndarray
    ordering: tuple[int, ...]
    top_k: tuple[int, ...]
    above_threshold: np.ndarray
    t: float
    k: int
    attribute_support: tuple[NodeSubset, ...] = field(default=())
    bipartite_densities: np.ndarray = field(default_factory=lambda: np.zeros(0))

    @property
    def num_clusters(self) -> int:
        return int(self.cluster_sizes.size)

    def members(self, cluster_id: int) -> NodeSubset:
        return NodeSubset(np.flatnonzero(self.labels == cluster_id))

    def is_dense_subblock(self, cluster_id: int) -> bool:
        support = self.attribute_support[cluster_id] if self.attribute_support else None
        return bool(
            self.above_threshold[cluster_id]
            and support is not None
            and len(support) > 0
            and self.bipartite_densities[cluster_id] >= self.t
        )


@dataclass(frozen=True, eq=False)
class GroundTruth:
    """
    Node-level anomaly labels of a planted-block graph.

    Fields:
        anomaly_labels    — length-n 0/1 vector.
        block_memberships — node subset of every planted block (pairwise disjoint).
        block_attributes  — attribute columns activated for every block.
    """
    anomaly_labels: np.ndarray
    block_memberships: tuple[NodeSubset, ...]
    block_attributes: tuple[NodeSubset, ...] = ()

    def __post_init__(self) -> None:
        labels = np.asarray(self.anomaly_labels, dtype=np.int8)
        expected = np.zeros_like(labels)
        for block in self.block_memberships:
            block.check_bounds(labels.size)
            if np.any(expected[block.indices]):
                raise DataError("planted blocks must be disjoint")
            expected[block.indices] = 1
        if not np.array_equal(labels, expected):
            raise DataError("anomaly labels disagree with block memberships")
        object.__setattr__(self, "anomaly_labels", labels)

    def block_of(self) -> np.ndarray:
        """Block index per node, -1 for clean nodes."""
        block = np.full(self.anomaly_labels.size, -1, dtype=np.int64)
        for b, members in enumerate(self.block_memberships):
            block[members.indices] = b
        return block


@dataclass(frozen=True, eq=False)
class GreedyResult:
    """
    Output of average-degree peeling.

    Fields:
        selected      — the node set with the best average degree.
        score_history — f(S) of the full set, then after every removal.
    """
    selected: NodeSubset
    score_history: tuple[float, ...]

    @property
    def best_score(self) -> float:
        return max(self.score_history)
