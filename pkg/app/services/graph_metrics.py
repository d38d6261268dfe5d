"""
Topology metrics of binary attributed graphs.

All functions are pure and read the graph without mutating it.
Directionality: densities count directed edges over ordered pairs, clustering
coefficients use the undirected projection, HITS runs on the directed graph.
"""
import logging

import numpy as np
import scipy.sparse as sp

from app.core.exceptions import ConfigurationError, DegenerateInputError, UndefinedDensityError
from app.core.models import BinaryAttributedGraph, NodeSubset

logger = logging.getLogger(__name__)

_TRIANGLE_CHUNK = 1024


def induced_density(g: BinaryAttributedGraph, s: NodeSubset) -> float:
    """
    Directed network density of the subgraph induced by `s`.
    Args:
        g (BinaryAttributedGraph): Source graph.
        s (NodeSubset): Node subset, at least 2 nodes.
    Returns:
        float: internal directed edges / (|s| * (|s| - 1)).
    Raises:
        UndefinedDensityError: If |s| < 2.
    """
    size = len(s)
    if size < 2:
        raise UndefinedDensityError(f"induced density needs at least 2 nodes, got {size}")
    s.check_bounds(g.n)
    internal = g.adjacency[s.indices][:, s.indices].nnz
    return internal / (size * (size - 1))


def bipartite_density(g: BinaryAttributedGraph, s_v: NodeSubset, s_x: NodeSubset) -> float:
    """Share of 1-entries in the attribute block X[s_v, s_x]."""
    if len(s_v) < 1 or len(s_x) < 1:
        raise UndefinedDensityError("bipartite density needs non-empty node and attribute subsets")
    s_v.check_bounds(g.n)
    s_x.check_bounds(g.d)
    ones = g.attributes[s_v.indices][:, s_x.indices].nnz
    return ones / (len(s_v) * len(s_x))


def _triangles_per_node(undirected: sp.csr_matrix) -> np.ndarray:
    n = undirected.shape[0]
    triangles = np.zeros(n)
    # Row chunks bound the size of the U[rows] @ U intermediate.
    for start in range(0, n, _TRIANGLE_CHUNK):
        rows = undirected[start:start + _TRIANGLE_CHUNK]
        paths = rows @ undirected
        triangles[start:start + rows.shape[0]] = np.asarray(paths.multiply(rows).sum(axis=1)).ravel() / 2.0
    return triangles


def clustering_coefficients(g: BinaryAttributedGraph) -> np.ndarray:
    """
    Local clustering coefficient of every node on the undirected projection.
    Nodes with fewer than two neighbours get 0.
    Returns:
        np.ndarray: length-n vector in [0, 1].
    """
    undirected = g.undirected
    degrees = np.asarray(undirected.sum(axis=1)).ravel()
    triangles = _triangles_per_node(undirected)
    coefficients = np.zeros(g.n)
    mask = degrees >= 2
    coefficients[mask] = 2.0 * triangles[mask] / (degrees[mask] * (degrees[mask] - 1.0))
    return coefficients


def _normalize(v: np.ndarray) -> np.ndarray:
    norm = np.linalg.norm(v)
    return v / norm if norm > 0 else v


def hits_scores(
    g: BinaryAttributedGraph,
    max_iters: int = 100,
    tol: float = 1e-10,
) -> tuple[np.ndarray, np.ndarray]:
    """
    HITS authority and hub scores by power iteration on the directed adjacency.

    authority <- normalize(A^T hub), hub <- normalize(A authority), both L2-normalized
    every iteration, starting from a uniform hub vector.
    Args:
        g (BinaryAttributedGraph): Graph with at least one edge.
        max_iters (int): Iteration cap (>= 1).
        tol (float): Stop once no score changes by tol or more (> 0).
    Returns:
        tuple[np.ndarray, np.ndarray]: (authority, hub), non-negative length-n vectors.
    Raises:
        DegenerateInputError: If the graph has no edges.
        ConfigurationError: If max_iters < 1 or tol <= 0.
    """
    if max_iters < 1 or tol <= 0:
        raise ConfigurationError("hits_scores needs max_iters >= 1 and tol > 0")
    if g.num_edges == 0:
        raise DegenerateInputError("HITS is undefined on a graph without edges")
    a = g.adjacency
    a_t = a.T.tocsr()
    hub = _normalize(np.ones(g.n))
    authority = np.zeros(g.n)
    for iteration in range(1, max_iters + 1):
        new_authority = _normalize(a_t @ hub)
        new_hub = _normalize(a @ new_authority)
        change = max(np.max(np.abs(new_authority - authority)), np.max(np.abs(new_hub - hub)))
        authority, hub = new_authority, new_hub
        if change < tol:
            logger.debug("HITS converged after %d iterations", iteration)
            break
    return authority, hub
