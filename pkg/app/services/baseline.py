"""
Average-degree peeling, the classic greedy densest-subgraph baseline.

Runs on the undirected projection of the follower graph and ignores attributes.
The returned set has at least half the best achievable average degree.
"""
import heapq

import numpy as np

from app.core.exceptions import DegenerateInputError
from app.core.models import BinaryAttributedGraph, GreedyResult, NodeSubset


def greedy_densest(g: BinaryAttributedGraph) -> GreedyResult:
    """
    Peel minimum-degree nodes and keep the prefix with the best edges(S) / |S|.
    Ties between equal degrees go to the smaller index; among equal scores the
    larger (earlier) set wins.
    Raises:
        DegenerateInputError: If the graph has no edges.
    """
    if g.num_edges == 0:
        raise DegenerateInputError("greedy peeling needs at least one edge")
    undirected = g.undirected
    degrees = np.asarray(undirected.sum(axis=1)).ravel().astype(np.int64)
    edges = int(degrees.sum()) // 2
    alive = np.ones(g.n, dtype=bool)
    heap = [(int(deg), i) for i, deg in enumerate(degrees)]
    heapq.heapify(heap)
    remaining = g.n
    history = [edges / remaining]
    removed: list[int] = []
    while remaining > 1:
        deg, node = heapq.heappop(heap)
        if not alive[node] or deg != degrees[node]:
            continue
        alive[node] = False
        remaining -= 1
        edges -= int(deg)
        removed.append(node)
        for neighbor in undirected.indices[undirected.indptr[node]:undirected.indptr[node + 1]]:
            if alive[neighbor]:
                degrees[neighbor] -= 1
                heapq.heappush(heap, (int(degrees[neighbor]), int(neighbor)))
        history.append(edges / remaining)
    best = int(np.argmax(history))
    keep = np.ones(g.n, dtype=bool)
    keep[removed[:best]] = False
    return GreedyResult(NodeSubset(np.flatnonzero(keep)), tuple(history))


def baseline_predict(g: BinaryAttributedGraph, result: GreedyResult) -> np.ndarray:
    flagged = np.zeros(g.n, dtype=np.int8)
    flagged[result.selected.indices] = 1
    return flagged
