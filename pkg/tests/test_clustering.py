import numpy as np
import pytest
from numpy.testing import assert_array_equal

from app.core.exceptions import ConfigurationError, DimensionMismatchError
from app.core.models import LatentMatrix, NodeSubset
from app.core.schemas import ClusterConfig
from app.services.clustering import attribute_support, detect_clusters, rank_clusters, ranking_entries
from tests.conftest import clique_graph, graph_from_pairs


def five_node_groups() -> tuple:
    """Group a (a0..a4) with 8 internal edges, group b (b0..b4) with 2."""
    a_edges = [("a0", "a1"), ("a1", "a0"), ("a1", "a2"), ("a2", "a3"), ("a3", "a4"), ("a4", "a0"), ("a0", "a2"),
               ("a2", "a0")]
    b_edges = [("b0", "b1"), ("b3", "b4")]
    g = graph_from_pairs(a_edges + b_edges, node_ids=[f"a{i}" for i in range(5)] + [f"b{i}" for i in range(5)])
    return g, np.array([0] * 5 + [1] * 5)


class TestRankClusters:
    def test_clique_is_ranked_first(self):
        g = clique_graph([10], noise_nodes=10)
        labels = np.array([1] * 10 + [0] * 8 + [-1] * 2)
        result = rank_clusters(g, labels, k=1, t=0.3)
        assert result.ordering == (1, 0)
        assert result.top_k == (1,)
        assert result.induced_densities[1] == 1.0
        assert result.induced_densities[0] == 0.0
        assert_array_equal(result.cluster_sizes, [8, 10])

    def test_all_noise(self):
        g = clique_graph([4])
        result = rank_clusters(g, np.full(4, -1), k=3, t=0.3)
        assert result.num_clusters == 0
        assert result.top_k == ()

    def test_threshold_flags(self):
        g, labels = five_node_groups()
        result = rank_clusters(g, labels, k=2, t=0.3)
        assert result.induced_densities[0] == pytest.approx(0.4)
        assert result.induced_densities[1] == pytest.approx(0.1)
        assert_array_equal(result.above_threshold, [True, False])

    def test_threshold_is_inclusive(self):
        g, labels = five_node_groups()
        assert rank_clusters(g, labels, k=2, t=0.4).above_threshold[0]

    def test_ties_go_to_smaller_id(self):
        g = clique_graph([3, 3])
        result = rank_clusters(g, np.array([1, 1, 1, 0, 0, 0]), k=2, t=0.5)
        assert result.ordering == (0, 1)

    def test_singleton_cluster_has_zero_density(self):
        g = clique_graph([3], noise_nodes=1)
        result = rank_clusters(g, np.array([0, 0, 0, 1]), k=2, t=0.5)
        assert result.induced_densities[1] == 0.0
        assert not result.above_threshold[1]

    def test_invalid_arguments(self):
        g = clique_graph([3])
        with pytest.raises(ConfigurationError):
            rank_clusters(g, np.zeros(3), k=0, t=0.3)
        with pytest.raises(ConfigurationError):
            rank_clusters(g, np.zeros(3), k=1, t=1.5)
        with pytest.raises(DimensionMismatchError):
            rank_clusters(g, np.zeros(2), k=1, t=0.3)


class TestAttributeSupport:
    def test_clique_hashtags_form_a_dense_subblock(self):
        g = clique_graph([6, 6], attrs_per_clique=3)
        result = rank_clusters(g, np.array([0] * 6 + [1] * 6), k=2, t=0.5)
        assert_array_equal(result.attribute_support[0].indices, [0, 1, 2])
        assert_array_equal(result.attribute_support[1].indices, [3, 4, 5])
        assert result.bipartite_densities[0] == 1.0
        assert result.is_dense_subblock(0)

    def test_share_threshold(self):
        attrs = [("u0", "#x"), ("u1", "#x"), ("u2", "#y")]
        g = graph_from_pairs([("u0", "u1"), ("u1", "u2"), ("u2", "u3")], attrs)
        members = NodeSubset.of(range(4))
        assert_array_equal(attribute_support(g, members, 0.5).indices, [g.attribute_names.index("#x")])
        assert len(attribute_support(g, members, 0.0)) == 2

    def test_dense_edges_without_shared_hashtags(self):
        edges = [(f"u{i}", f"u{j}") for i in range(5) for j in range(5) if i != j]
        g = graph_from_pairs(edges, [(f"u{i}", f"#own{i}") for i in range(5)])
        result = rank_clusters(g, np.zeros(5, dtype=int), k=1, t=0.3)
        assert result.above_threshold[0]
        assert not result.is_dense_subblock(0)

    def test_ranking_entries(self):
        g = clique_graph([6, 4], attrs_per_clique=2)
        result = rank_clusters(g, np.array([1] * 6 + [0] * 4), k=2, t=0.5)
        entries = ranking_entries(g, result)
        assert [e.cluster_id for e in entries] == [0, 1]
        assert entries[0].size == 4
        assert entries[1].attribute_subset == ["#a0", "#a1"]
        assert all(e.dense_subblock for e in entries)


class TestDetectClusters:
    def test_separated_embedding_recovers_groups(self):
        g = clique_graph([8, 8])
        h = np.zeros((16, 3))
        h[:8, 0] = np.linspace(0.0, 0.1, 8)
        h[8:, 0] = 5.0 + np.linspace(0.0, 0.1, 8)
        h[:, 1] = np.tile([0.0, 0.01], 8)
        latent = LatentMatrix(h, g.node_ids)
        result = detect_clusters(g, latent, ClusterConfig(out_dims=2, eps=0.3, min_pts=3, k=2, t=0.5))
        assert result.num_clusters == 2
        assert_array_equal(result.labels, [0] * 8 + [1] * 8)
        assert all(result.above_threshold)

    def test_out_dims_above_latent_dimension(self):
        g = clique_graph([4])
        with pytest.raises(ConfigurationError):
            detect_clusters(g, LatentMatrix(np.zeros((4, 2)), g.node_ids), ClusterConfig(out_dims=3))
