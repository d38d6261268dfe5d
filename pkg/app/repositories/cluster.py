from pathlib import Path

import numpy as np
import pandas as pd

from app.core.exceptions import DimensionMismatchError, GraphFormatError
from app.core.schemas import ClusterRanking
from app.repositories.base_repo import BaseRepository


class ClusterRepository(BaseRepository[list[ClusterRanking]]):
    """Cluster labels (CSV) and the density ranking of the top clusters (JSON)."""

    def __init__(self):
        super().__init__(list[ClusterRanking])

    def save_labels(self, path: Path, node_ids: tuple[str, ...], labels: np.ndarray) -> Path:
        frame = pd.DataFrame({"node_id": list(node_ids), "cluster_label": np.asarray(labels, dtype=np.int64)})
        return self.write_frame(path, frame)

    def load_labels(self, path: Path, node_ids: tuple[str, ...]) -> np.ndarray:
        """Labels in the node order of the graph they were computed on."""
        frame = self.read_frame(path, ["node_id", "cluster_label"], dtype={"node_id": str})
        if tuple(frame["node_id"]) != tuple(node_ids):
            raise DimensionMismatchError(f"{path} does not label the nodes of the current graph in order")
        try:
            return frame["cluster_label"].to_numpy(dtype=np.int64)
        except ValueError as exc:
            raise GraphFormatError(str(path), None, f"non-integer cluster label ({exc})") from exc
