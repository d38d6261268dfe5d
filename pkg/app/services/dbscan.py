from collections import deque

import numpy as np
from scipy.spatial.distance import cdist

from app.core.exceptions import ConfigurationError, NumericError

NOISE = -1
_UNASSIGNED = -2
_NEIGHBOR_BLOCK = 1 << 22


def eps_neighborhoods(points: np.ndarray, eps: float) -> list[np.ndarray]:
    """Ascending indices within distance eps of every point (the point included)."""
    n = points.shape[0]
    chunk = max(1, _NEIGHBOR_BLOCK // max(n, 1))
    neighborhoods: list[np.ndarray] = []
    for start in range(0, n, chunk):
        within = cdist(points[start:start + chunk], points) <= eps
        neighborhoods.extend(np.flatnonzero(row) for row in within)
    return neighborhoods


def dbscan(points: np.ndarray, eps: float, min_pts: int) -> np.ndarray:
    """
    Density-based clustering with Euclidean eps-neighbourhoods.

    Core points have at least `min_pts` neighbours, themselves included.
    Clusters are grown breadth-first from the lowest-index unassigned core
    point; a border point joins the first cluster that reaches it.
    Args:
        points (np.ndarray): n x m finite coordinates.
        eps (float): Neighbourhood radius (> 0).
        min_pts (int): Core threshold (>= 1).
    Returns:
        np.ndarray: length-n labels, -1 for noise, clusters numbered from 0.
    Raises:
        ConfigurationError: If eps <= 0 or min_pts < 1.
        NumericError: If points contain non-finite values.
    """
    if eps <= 0:
        raise ConfigurationError(f"eps must be positive, got {eps}")
    if min_pts < 1:
        raise ConfigurationError(f"min_pts must be at least 1, got {min_pts}")
    points = np.asarray(points, dtype=np.float64)
    if points.ndim == 1:
        points = points[:, None]
    if not np.all(np.isfinite(points)):
        raise NumericError("dbscan received non-finite points")
    n = points.shape[0]
    neighborhoods = eps_neighborhoods(points, eps)
    core = np.array([len(nb) >= min_pts for nb in neighborhoods], dtype=bool)
    labels = np.full(n, _UNASSIGNED, dtype=np.int64)
    cluster = 0
    for seed in range(n):
        if labels[seed] != _UNASSIGNED or not core[seed]:
            continue
        labels[seed] = cluster
        queue = deque([seed])
        while queue:
            p = queue.popleft()
            if not core[p]:
                continue
            for q in neighborhoods[p]:
                if labels[q] == _UNASSIGNED:
                    labels[q] = cluster
                    queue.append(q)
        cluster += 1
    labels[labels == _UNASSIGNED] = NOISE
    return labels
