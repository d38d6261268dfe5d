"""Pairwise distance matrices and the exponential similarity transform."""
import numpy as np
import scipy.sparse as sp

from app.core.exceptions import ConfigurationError, NumericError
from app.core.models import DistanceKind, DistanceMatrix

# Bound on the chunk x n x k difference tensor of pairwise_euclidean.
_EUCLIDEAN_BLOCK = 1 << 22


def jaccard_to(rows: sp.csr_matrix, vector: sp.csr_matrix | np.ndarray) -> np.ndarray:
    """
    Jaccard distance of every row of `rows` to a single binary vector.
    Two empty supports are at distance 0.
    """
    vec = np.asarray(vector.toarray() if sp.issparse(vector) else vector, dtype=np.float64).ravel()
    intersections = np.asarray(rows @ vec).ravel()
    unions = np.asarray(rows.sum(axis=1)).ravel() + vec.sum() - intersections
    similarity = np.divide(intersections, unions, out=np.ones_like(unions), where=unions > 0)
    return 1.0 - similarity


def pairwise_jaccard(rows: sp.spmatrix | np.ndarray) -> DistanceMatrix:
    """
    Pairwise Jaccard distance of the rows of a binary matrix.
    Args:
        rows: n x d binary matrix (dense or sparse).
    Returns:
        DistanceMatrix: symmetric, zero diagonal, entries in [0, 1].
    """
    r = sp.csr_matrix(rows, dtype=np.float64)
    intersections = (r @ r.T).toarray()
    sizes = np.asarray(r.sum(axis=1)).ravel()
    unions = sizes[:, None] + sizes[None, :] - intersections
    similarity = np.divide(intersections, unions, out=np.ones_like(unions), where=unions > 0)
    values = 1.0 - similarity
    np.fill_diagonal(values, 0.0)
    return DistanceMatrix(values, DistanceKind.JACCARD)


def pairwise_euclidean(h: np.ndarray) -> DistanceMatrix:
    """
    Pairwise L2 distance of the rows of a real matrix.
    Differences are formed explicitly, so the result is exactly symmetric.
    Raises:
        NumericError: If `h` has non-finite entries.
    """
    h = np.asarray(h, dtype=np.float64)
    if not np.all(np.isfinite(h)):
        raise NumericError("pairwise_euclidean received non-finite input")
    n, k = h.shape
    values = np.empty((n, n))
    chunk = max(1, _EUCLIDEAN_BLOCK // max(1, n * k))
    for start in range(0, n, chunk):
        diff = h[start:start + chunk, None, :] - h[None, :, :]
        values[start:start + chunk] = np.sqrt(np.einsum("ijk,ijk->ij", diff, diff))
    return DistanceMatrix(values, DistanceKind.EUCLIDEAN)


def similarity_transform(dist: DistanceMatrix, lam: float) -> DistanceMatrix:
    """
    Entrywise exp(-lam * dist) of a Euclidean distance matrix.
    Raises:
        ConfigurationError: If lam < 0 or `dist` is not Euclidean.
    """
    if lam < 0:
        raise ConfigurationError(f"similarity transform rate must be >= 0, got {lam}")
    if dist.kind != DistanceKind.EUCLIDEAN:
        raise ConfigurationError(f"similarity transform applies to euclidean distances, got {dist.kind}")
    return DistanceMatrix(np.exp(-lam * dist.values), DistanceKind.TRANSFORMED)
