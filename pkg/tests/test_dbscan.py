import numpy as np
import pytest
from numpy.testing import assert_array_equal

from app.core.exceptions import ConfigurationError, NumericError
from app.services.dbscan import NOISE, dbscan


def naive_dbscan(points: np.ndarray, eps: float, min_pts: int) -> np.ndarray:
    """Textbook breadth-first DBSCAN; border points keep the first cluster that reaches them."""
    n = len(points)
    dist = np.sqrt(((points[:, None, :] - points[None, :, :]) ** 2).sum(axis=-1))
    neighbors = [[j for j in range(n) if dist[i, j] <= eps] for i in range(n)]
    core = [len(nb) >= min_pts for nb in neighbors]
    labels = [None] * n
    cluster = 0
    for i in range(n):
        if labels[i] is not None or not core[i]:
            continue
        labels[i] = cluster
        frontier = [i]
        reached = {i}
        while frontier:
            p = frontier.pop(0)
            if not core[p]:
                continue
            for q in neighbors[p]:
                if labels[q] is None:
                    labels[q] = cluster
                if q not in reached:
                    reached.add(q)
                    frontier.append(q)
        cluster += 1
    return np.array([-1 if label is None else label for label in labels])


def core_partition(labels: np.ndarray, core: np.ndarray) -> set[frozenset[int]]:
    return {frozenset(np.flatnonzero((labels == c) & core)) for c in set(labels[core])}


class TestDbscan:
    def test_two_separated_groups(self):
        group = np.column_stack([np.arange(5) * 0.1, np.zeros(5)])
        points = np.vstack([group, group + 10.0])
        labels = dbscan(points, eps=0.5, min_pts=3)
        assert_array_equal(labels, [0] * 5 + [1] * 5)

    def test_identical_points_form_one_cluster(self):
        labels = dbscan(np.zeros((6, 2)), eps=0.1, min_pts=6)
        assert_array_equal(labels, np.zeros(6, dtype=int))

    def test_isolated_point_is_noise(self):
        labels = dbscan(np.array([[0.0, 0.0], [0.05, 0.0], [5.0, 5.0]]), eps=0.1, min_pts=2)
        assert_array_equal(labels, [0, 0, NOISE])

    def test_matches_naive_oracle(self, rng):
        for _ in range(100):
            n = int(rng.integers(1, 50))
            points = rng.normal(size=(n, 2)) * rng.uniform(0.5, 3.0)
            eps, min_pts = float(rng.uniform(0.2, 1.5)), int(rng.integers(1, 6))
            labels = dbscan(points, eps, min_pts)
            expected = naive_dbscan(points, eps, min_pts)
            assert_array_equal(labels, expected)

    def test_core_partition_is_order_independent(self, rng):
        points = rng.normal(size=(40, 2))
        eps, min_pts = 0.6, 4
        perm = rng.permutation(40)
        labels = dbscan(points, eps, min_pts)
        permuted = np.empty(40, dtype=int)
        permuted[perm] = dbscan(points[perm], eps, min_pts)
        dist = np.sqrt(((points[:, None] - points[None]) ** 2).sum(-1))
        core = (dist <= eps).sum(axis=1) >= min_pts
        assert core_partition(labels, core) == core_partition(permuted, core)
        assert_array_equal(labels[~core] == NOISE, permuted[~core] == NOISE)

    def test_invalid_parameters(self):
        with pytest.raises(ConfigurationError):
            dbscan(np.zeros((3, 2)), eps=0.0, min_pts=2)
        with pytest.raises(ConfigurationError):
            dbscan(np.zeros((3, 2)), eps=1.0, min_pts=0)
        with pytest.raises(NumericError):
            dbscan(np.array([[np.nan, 0.0]]), eps=1.0, min_pts=1)
