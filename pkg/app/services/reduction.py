import logging
from typing import Protocol

import numpy as np

from app.core.exceptions import ConfigurationError, NumericError
from app.core.models import LatentMatrix

logger = logging.getLogger(__name__)

_RANK_TOL = 1e-12


class Reducer(Protocol):
    """Any n x k -> n x m projection of the embedding."""

    def fit_transform(self, h: np.ndarray) -> np.ndarray: ...


class PCAReducer:
    """
    Principal-component projection.

    Columns are mean-centred and projected onto the top `out_dims` eigenvectors
    of the covariance matrix, in descending eigenvalue order. Each eigenvector
    is oriented so that its largest-magnitude entry is positive. Components
    beyond the numerical rank of the data are returned as zero columns.

    Attributes:
        components — k x out_dims orthonormal projection matrix of the last fit.
        explained_variance — eigenvalues of the kept components.
    """

    def __init__(self, out_dims: int = 2):
        if out_dims < 1:
            raise ConfigurationError(f"out_dims must be positive, got {out_dims}")
        self.out_dims = out_dims
        self.components: np.ndarray | None = None
        self.explained_variance: np.ndarray | None = None

    def fit_transform(self, h: np.ndarray) -> np.ndarray:
        h = np.asarray(h, dtype=np.float64)
        if not np.all(np.isfinite(h)):
            raise NumericError("cannot reduce a non-finite embedding")
        n, k = h.shape
        if self.out_dims > k:
            raise ConfigurationError(f"cannot reduce {k} dimensions to {self.out_dims}")
        centered = h - h.mean(axis=0)
        covariance = centered.T @ centered / max(n - 1, 1)
        eigenvalues, eigenvectors = np.linalg.eigh(covariance)
        order = np.argsort(eigenvalues)[::-1][: self.out_dims]
        eigenvalues, eigenvectors = eigenvalues[order], eigenvectors[:, order]
        pivots = np.argmax(np.abs(eigenvectors), axis=0)
        signs = np.sign(eigenvectors[pivots, np.arange(self.out_dims)])
        eigenvectors = eigenvectors * np.where(signs == 0, 1.0, signs)
        self.components = eigenvectors
        self.explained_variance = np.clip(eigenvalues, 0.0, None)
        projected = centered @ eigenvectors
        top = float(eigenvalues[0]) if eigenvalues.size else 0.0
        deficient = eigenvalues <= _RANK_TOL * top if top > 0 else np.ones(self.out_dims, dtype=bool)
        if np.any(deficient):
            logger.warning(
                "Embedding has rank below %d; zero-padding %d component(s)",
                self.out_dims, int(deficient.sum()),
            )
            projected[:, deficient] = 0.0
        return projected


REDUCERS: dict[str, type[PCAReducer]] = {"pca": PCAReducer}


def reduce(latent: LatentMatrix, out_dims: int, method: str = "pca") -> np.ndarray:
    """Project H onto `out_dims` dimensions with the named reducer."""
    try:
        reducer = REDUCERS[method](out_dims)
    except KeyError:
        raise ConfigurationError(f"unknown reducer {method!r}") from None
    return reducer.fit_transform(latent.h)


def rescale(points: np.ndarray) -> np.ndarray:
    """Divide by the standard deviation of the first column, keeping relative geometry."""
    if points.size == 0:
        return points
    spread = float(np.std(points[:, 0]))
    return points / spread if spread > 0 else points
