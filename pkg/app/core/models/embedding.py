from dataclasses import dataclass
from app._compat import StrEnum

import numpy as np

from app.core.exceptions import DimensionMismatchError, NumericError


class DistanceKind(StrEnum):
    JACCARD = "jaccard"
    EUCLIDEAN = "euclidean"
    TRANSFORMED = "transformed"


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    values: np.ndarray
    kind: DistanceKind


@dataclass(frozen=True, eq=False)
class LatentMatrix:
    """
    Joint embedding H, one row per node of the source graph.

    Fields:
        h        — n x k real matrix.
        node_ids — identifiers of the rows, in graph order.
    """
    h: np.ndarray
    node_ids: tuple[str, ...]

    def __post_init__(self) -> None:
        h = np.asarray(self.h, dtype=np.float64)
        if h.ndim != 2 or h.shape[0] != len(self.node_ids):
            raise DimensionMismatchError(f"latent matrix of shape {h.shape} does not match {len(self.node_ids)} nodes")
        bad = h[~np.isfinite(h)]
        if bad.size:
            raise NumericError("latent matrix contains non-finite entries", float(bad[0]))
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "node_ids", tuple(self.node_ids))

    @property
    def dim(self) -> int:
        return int(self.h.shape[1])
