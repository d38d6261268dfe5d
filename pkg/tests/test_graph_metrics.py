import itertools

import numpy as np
import pytest
from numpy.testing import assert_allclose

from app.core.exceptions import DegenerateInputError, UndefinedDensityError
from app.core.models import BinaryAttributedGraph, NodeSubset
from app.services.graph_metrics import bipartite_density, clustering_coefficients, hits_scores, induced_density
from tests.conftest import graph_from_pairs, random_graph


def brute_force_clustering(g: BinaryAttributedGraph) -> np.ndarray:
    a = g.adjacency.toarray()
    u = (a + a.T) > 0
    result = np.zeros(g.n)
    for i in range(g.n):
        neighbors = np.flatnonzero(u[i])
        deg = len(neighbors)
        if deg < 2:
            continue
        links = sum(1 for j, k in itertools.combinations(neighbors, 2) if u[j, k])
        result[i] = 2.0 * links / (deg * (deg - 1))
    return result


class TestInducedDensity:
    def test_complete_triangle(self):
        g = graph_from_pairs([(u, v) for u in "abc" for v in "abc" if u != v])
        assert induced_density(g, NodeSubset.of(range(3))) == 1.0

    def test_no_internal_edges(self):
        g = graph_from_pairs([("a", "x"), ("b", "x"), ("c", "x")])
        s = NodeSubset.of(g.node_index[v] for v in "abc")
        assert induced_density(g, s) == 0.0

    def test_directed_path(self):
        g = graph_from_pairs([("a", "b"), ("b", "c")])
        assert induced_density(g, NodeSubset.of(range(3))) == pytest.approx(2 / 6)

    def test_single_node_is_undefined(self):
        g = graph_from_pairs([("a", "b")])
        with pytest.raises(UndefinedDensityError):
            induced_density(g, NodeSubset.of([0]))

    def test_matches_edge_count_oracle(self, rng):
        for _ in range(100):
            g = random_graph(rng, int(rng.integers(2, 40)), 3, rng.random(), 0.1)
            members = np.flatnonzero(rng.random(g.n) < 0.5)
            if members.size < 2:
                continue
            a = g.adjacency.toarray()
            expected = sum(a[i, j] for i in members for j in members) / (members.size * (members.size - 1))
            assert induced_density(g, NodeSubset(members)) == pytest.approx(expected, abs=1e-12)

    def test_adding_internal_edge_never_decreases(self, rng):
        g = random_graph(rng, 15, 2, 0.2, 0.1)
        s = NodeSubset.of(range(8))
        a = g.adjacency.toarray()
        missing = [(i, j) for i in range(8) for j in range(8) if i != j and not a[i, j]]
        i, j = missing[0]
        denser = g.with_entries(np.array([[i, j]]), np.zeros((0, 2), dtype=np.int64))
        assert induced_density(denser, s) > induced_density(g, s)


class TestBipartiteDensity:
    def test_full_and_empty_blocks(self):
        g = graph_from_pairs([("a", "b")], [("a", "#x"), ("a", "#y"), ("b", "#x"), ("b", "#y"), ("c", "#z")])
        assert bipartite_density(g, NodeSubset.of([0, 1]), NodeSubset.of([0, 1])) == 1.0
        assert bipartite_density(g, NodeSubset.of([0, 1]), NodeSubset.of([2])) == 0.0

    def test_three_ones_in_three_by_two(self):
        g = graph_from_pairs([("a", "b")], [("a", "#x"), ("b", "#y"), ("c", "#x"), ("c", "#z")])
        assert bipartite_density(g, NodeSubset.of([0, 1, 2]), NodeSubset.of([0, 1])) == 0.5

    def test_empty_subset(self):
        g = graph_from_pairs([("a", "b")], [("a", "#x")])
        with pytest.raises(UndefinedDensityError):
            bipartite_density(g, NodeSubset.of([]), NodeSubset.of([0]))


class TestClusteringCoefficients:
    def test_triangle(self):
        g = graph_from_pairs([("a", "b"), ("b", "c"), ("c", "a")])
        assert_allclose(clustering_coefficients(g), [1.0, 1.0, 1.0])

    def test_star_center(self):
        g = graph_from_pairs([("c", leaf) for leaf in "wxyz"])
        assert clustering_coefficients(g)[0] == 0.0

    def test_one_link_among_three_neighbors(self):
        g = graph_from_pairs([("c", "x"), ("y", "c"), ("c", "z"), ("x", "y")])
        assert clustering_coefficients(g)[0] == pytest.approx(1 / 3)

    def test_low_degree_nodes_get_zero(self):
        g = graph_from_pairs([("a", "b")], node_ids=["a", "b", "lonely"])
        assert_allclose(clustering_coefficients(g), [0.0, 0.0, 0.0])

    def test_matches_triple_loop_oracle(self, rng):
        for _ in range(100):
            g = random_graph(rng, int(rng.integers(1, 50)), 2, rng.random() * 0.5, 0.1)
            assert_allclose(clustering_coefficients(g), brute_force_clustering(g), atol=1e-12)


class TestHits:
    def test_single_edge(self):
        g = graph_from_pairs([("a", "b")])
        authority, hub = hits_scores(g)
        assert_allclose(authority, [0.0, 1.0])
        assert_allclose(hub, [1.0, 0.0])

    def test_symmetric_triangle(self):
        g = graph_from_pairs([(u, v) for u in "abc" for v in "abc" if u != v])
        authority, _ = hits_scores(g)
        assert_allclose(authority, np.full(3, 1 / np.sqrt(3)))

    def test_two_followers_of_one_node(self):
        g = graph_from_pairs([("a", "c"), ("b", "c")])
        authority, hub = hits_scores(g)
        assert_allclose(authority, [0.0, 0.0, 1.0], atol=1e-12)
        assert_allclose(hub, [1 / np.sqrt(2), 1 / np.sqrt(2), 0.0])

    def test_fixed_point_and_permutation(self, rng):
        g = random_graph(rng, 30, 2, 0.15, 0.1)
        authority, hub = hits_scores(g, max_iters=1000, tol=1e-12)
        again = g.adjacency.T @ hub
        assert_allclose(again / np.linalg.norm(again), authority, atol=1e-8)
        assert np.all(authority >= 0) and np.all(hub >= 0)

        perm = rng.permutation(g.n)
        a = g.adjacency.toarray()[np.ix_(perm, perm)]
        permuted = BinaryAttributedGraph.from_indices(
            [g.node_ids[i] for i in perm], list(g.attribute_names), np.argwhere(a), np.zeros((0, 2), dtype=np.int64)
        )
        perm_authority, _ = hits_scores(permuted, max_iters=1000, tol=1e-12)
        assert_allclose(perm_authority, authority[perm], atol=1e-8)

    def test_edgeless_graph(self):
        g = graph_from_pairs([], [("a", "#x"), ("b", "#x")])
        with pytest.raises(DegenerateInputError):
            hits_scores(g)
