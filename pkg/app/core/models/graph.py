from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
import scipy.sparse as sp

from app.core.exceptions import DataError, DimensionMismatchError


@dataclass(frozen=True, eq=False)
class NodeSubset:
    """
    An ordered set of row (node) or column (attribute) indices.

    Fields:
        indices — strictly increasing non-negative indices.

    Notes:
        - Use `NodeSubset.of(...)` to build a subset from unsorted, possibly
          repeated indices.
    """
    indices: np.ndarray

    def __post_init__(self) -> None:
        indices = np.asarray(self.indices, dtype=np.int64).reshape(-1)
        if indices.size and (indices[0] < 0 or np.any(np.diff(indices) <= 0)):
            raise DataError("NodeSubset indices must be non-negative and strictly increasing")
        object.__setattr__(self, "indices", indices)

    @classmethod
    def of(cls, indices: Iterable[int]) -> "NodeSubset":
        return cls(np.unique(np.fromiter(indices, dtype=np.int64)))

    def __len__(self) -> int:
        return int(self.indices.size)

    def __iter__(self) -> Iterator[int]:
        return (int(i) for i in self.indices)

    def check_bounds(self, size: int) -> None:
        if self.indices.size and self.indices[-1] >= size:
            raise DimensionMismatchError(f"index {int(self.indices[-1])} out of range for size {size}")


def _binary_csr(matrix: sp.spmatrix | np.ndarray, shape: tuple[int, int]) -> sp.csr_matrix:
    csr = sp.csr_matrix(matrix, dtype=np.float64)
    if csr.shape != shape:
        raise DimensionMismatchError(f"expected matrix of shape {shape}, got {csr.shape}")
    csr.sum_duplicates()
    csr.eliminate_zeros()
    if csr.nnz and not np.all(csr.data == 1.0):
        raise DataError("adjacency and attribute matrices must be binary")
    csr.sort_indices()
    return csr


@dataclass(frozen=True, eq=False)
class BinaryAttributedGraph:
    """
    Directed follower graph whose nodes carry binary attribute (hashtag) vectors.

    The graph is immutable after construction; every metric in the services
    layer reads it without mutation, so one instance can be shared freely.

    Fields:
        node_ids        — external node identifiers, position = node index.
        attribute_names — attribute names, position = column index.
        adjacency       — n x n binary CSR matrix, A[i, j] = 1 iff i -> j.
        attributes      — n x d binary CSR matrix, X[i, c] = 1 iff node i used attribute c.

    Notes:
        - Self-loops are rejected; ingestion drops them before construction.
        - Matrices are stored as float64 so products never overflow.
    """
    node_ids: tuple[str, ...]
    attribute_names: tuple[str, ...]
    adjacency: sp.csr_matrix = field(repr=False)
    attributes: sp.csr_matrix = field(repr=False)

    def __post_init__(self) -> None:
        node_ids = tuple(self.node_ids)
        attribute_names = tuple(self.attribute_names)
        n, d = len(node_ids), len(attribute_names)
        if len(set(node_ids)) != n:
            raise DataError("duplicate node ids")
        if len(set(attribute_names)) != d:
            raise DataError("duplicate attribute names")
        adjacency = _binary_csr(self.adjacency, (n, n))
        if adjacency.diagonal().any():
            raise DataError("adjacency matrix must not contain self-loops")
        object.__setattr__(self, "node_ids", node_ids)
        object.__setattr__(self, "attribute_names", attribute_names)
        object.__setattr__(self, "adjacency", adjacency)
        object.__setattr__(self, "attributes", _binary_csr(self.attributes, (n, d)))

    @classmethod
    def from_indices(
        cls,
        node_ids: Sequence[str],
        attribute_names: Sequence[str],
        edges: np.ndarray | Sequence[tuple[int, int]],
        activations: np.ndarray | Sequence[tuple[int, int]] = (),
    ) -> "BinaryAttributedGraph":
        """
        Build a graph from index pairs. Duplicate pairs collapse to one entry.
        Args:
            node_ids (Sequence[str]): Node identifiers.
            attribute_names (Sequence[str]): Attribute names.
            edges: (src, dst) index pairs.
            activations: (node, column) index pairs.
        Returns:
            BinaryAttributedGraph: The constructed graph.
        """
        n, d = len(node_ids), len(attribute_names)
        edge_arr = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        act_arr = np.asarray(activations, dtype=np.int64).reshape(-1, 2)
        adjacency = sp.csr_matrix(
            (np.ones(len(edge_arr)), (edge_arr[:, 0], edge_arr[:, 1])), shape=(n, n)
        )
        attributes = sp.csr_matrix(
            (np.ones(len(act_arr)), (act_arr[:, 0], act_arr[:, 1])), shape=(n, d)
        )
        adjacency.sum_duplicates()
        attributes.sum_duplicates()
        adjacency.data[:] = 1.0
        attributes.data[:] = 1.0
        return cls(tuple(node_ids), tuple(attribute_names), adjacency, attributes)

    @property
    def n(self) -> int:
        return len(self.node_ids)

    @property
    def d(self) -> int:
        return len(self.attribute_names)

    @property
    def num_edges(self) -> int:
        return int(self.adjacency.nnz)

    @cached_property
    def node_index(self) -> dict[str, int]:
        return {node_id: i for i, node_id in enumerate(self.node_ids)}

    @cached_property
    def undirected(self) -> sp.csr_matrix:
        """Binary symmetric adjacency: edge iff A[i, j] = 1 or A[j, i] = 1."""
        sym = (self.adjacency + self.adjacency.T).tocsr()
        sym.data[:] = 1.0
        sym.eliminate_zeros()
        sym.sort_indices()
        return sym

    def edge_index_pairs(self) -> np.ndarray:
        coo = self.adjacency.tocoo()
        order = np.lexsort((coo.col, coo.row))
        return np.column_stack([coo.row[order], coo.col[order]]).astype(np.int64)

    def activation_index_pairs(self) -> np.ndarray:
        coo = self.attributes.tocoo()
        order = np.lexsort((coo.col, coo.row))
        return np.column_stack([coo.row[order], coo.col[order]]).astype(np.int64)

    def subgraph(self, subset: NodeSubset) -> "BinaryAttributedGraph":
        """Induced subgraph on `subset`, keeping all attribute columns."""
        subset.check_bounds(self.n)
        idx = subset.indices
        return BinaryAttributedGraph(
            tuple(self.node_ids[i] for i in idx),
            self.attribute_names,
            self.adjacency[idx][:, idx],
            self.attributes[idx],
        )

    def with_entries(
        self,
        edges: np.ndarray,
        activations: np.ndarray,
    ) -> "BinaryAttributedGraph":
        """New graph holding the union of this graph's entries and the given index pairs."""
        all_edges = np.vstack([self.edge_index_pairs(), np.asarray(edges, dtype=np.int64).reshape(-1, 2)])
        all_acts = np.vstack(
            [self.activation_index_pairs(), np.asarray(activations, dtype=np.int64).reshape(-1, 2)]
        )
        return BinaryAttributedGraph.from_indices(self.node_ids, self.attribute_names, all_edges, all_acts)
