from pathlib import Path

import numpy as np
import pandas as pd

from app.core.exceptions import DimensionMismatchError, GraphFormatError
from app.core.models import GroundTruth, NodeSubset
from app.core.schemas import BestConfig, SearchResult, SweepRow
from app.repositories.base_repo import BaseRepository


class InjectionRepository(BaseRepository[BestConfig]):
    """
    Ground truth of planted blocks and the outputs of searches and sweeps.
    The JSON document type is the best configuration found by a search.
    """

    def __init__(self):
        super().__init__(BestConfig)

    def save_ground_truth(self, path: Path, node_ids: tuple[str, ...], truth: GroundTruth) -> Path:
        frame = pd.DataFrame({
            "node_id": list(node_ids),
            "label": truth.anomaly_labels.astype(np.int64),
            "block": truth.block_of(),
        })
        return self.write_frame(path, frame)

    def load_ground_truth(self, path: Path, node_ids: tuple[str, ...]) -> GroundTruth:
        frame = self.read_frame(path, ["node_id", "label", "block"], dtype={"node_id": str})
        if tuple(frame["node_id"]) != tuple(node_ids):
            raise DimensionMismatchError(f"{path} does not cover the nodes of the current graph in order")
        try:
            labels = frame["label"].to_numpy(dtype=np.int64)
            blocks = frame["block"].to_numpy(dtype=np.int64)
        except ValueError as exc:
            raise GraphFormatError(str(path), None, f"non-integer label or block ({exc})") from exc
        if not np.isin(labels, (0, 1)).all():
            raise GraphFormatError(str(path), None, "labels must be 0 or 1")
        num_blocks = int(blocks.max()) + 1 if blocks.size and blocks.max() >= 0 else 0
        memberships = tuple(NodeSubset(np.flatnonzero(blocks == b)) for b in range(num_blocks))
        return GroundTruth(labels, memberships)

    def save_trial_log(self, path: Path, result: SearchResult) -> Path:
        frame = pd.DataFrame({
            "trial": [r.trial for r in result.trials],
            "config_json": [r.config.model_dump_json() for r in result.trials],
            "f1": [r.f1 for r in result.trials],
            "runtime_s": [r.runtime_s for r in result.trials],
            "diverged": [r.diverged for r in result.trials],
        })
        return self.write_frame(path, frame)

    def save_best_config(self, path: Path, result: SearchResult) -> Path:
        return self.save(path, BestConfig(config=result.best_config, f1=result.best_f1, trial=result.best_trial))

    def save_sweep(self, path: Path, rows: list[SweepRow]) -> Path:
        frame = pd.DataFrame({
            "density": [r.density for r in rows],
            "pipeline_f1": [r.pipeline_f1 for r in rows],
            "baseline_f1": [r.baseline_f1 for r in rows],
            "pipeline_f1_runs": [" ".join(f"{v:.6f}" for v in r.pipeline_f1_runs) for r in rows],
            "baseline_f1_runs": [" ".join(f"{v:.6f}" for v in r.baseline_f1_runs) for r in rows],
        })
        return self.write_frame(path, frame)
