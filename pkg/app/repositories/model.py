from pathlib import Path

import numpy as np
import pandas as pd

from app.core.exceptions import DimensionMismatchError, GraphFormatError
from app.core.models import Architecture, LatentMatrix, ModelParams
from app.core.models.params import LAYERS
from app.core.schemas import Checkpoint, CheckpointTensor
from app.repositories.base_repo import BaseRepository

LOSS_COLUMNS: list[str] = ["iteration", "total", "recon_A", "recon_X", "sim_A", "sim_X", "reg"]


def _tensor(values: np.ndarray) -> CheckpointTensor:
    return CheckpointTensor(shape=list(values.shape), values=values.ravel().tolist())


def _array(tensor: CheckpointTensor) -> np.ndarray:
    values = np.asarray(tensor.values, dtype=np.float64)
    if values.size != int(np.prod(tensor.shape)):
        raise DimensionMismatchError(f"{values.size} values do not fill shape {tensor.shape}")
    return values.reshape(tensor.shape)


class ModelRepository(BaseRepository[Checkpoint]):
    """Checkpoints, latent matrix exports and loss histories of training runs."""

    def __init__(self):
        super().__init__(Checkpoint)

    def save_checkpoint(self, path: Path, params: ModelParams, seed: int, iterations: int) -> Path:
        checkpoint = Checkpoint(
            arch=vars(params.arch),
            seed=seed,
            iterations=iterations,
            weights={name: _tensor(params.weights[name]) for name in LAYERS},
            biases={name: _tensor(params.biases[name]) for name in LAYERS},
        )
        return self.save(path, checkpoint)

    def load_params(self, path: Path) -> tuple[ModelParams, Checkpoint]:
        checkpoint = self.load(path)
        try:
            arch = Architecture(**checkpoint.arch)
        except TypeError as exc:
            raise GraphFormatError(str(path), None, f"invalid architecture {checkpoint.arch}") from exc
        params = ModelParams(
            arch,
            {name: _array(t) for name, t in checkpoint.weights.items()},
            {name: _array(t) for name, t in checkpoint.biases.items()},
        )
        return params, checkpoint

    def save_latent(self, path: Path, latent: LatentMatrix) -> Path:
        frame = pd.DataFrame(latent.h, columns=[f"h_{i}" for i in range(latent.dim)])
        frame.insert(0, "node_id", list(latent.node_ids))
        return self.write_frame(path, frame)

    def load_latent(self, path: Path) -> LatentMatrix:
        frame = self.read_frame(path, ["node_id"], dtype={"node_id": str})
        values = frame.drop(columns="node_id")
        if values.shape[1] == 0:
            raise GraphFormatError(str(path), 1, "latent export has no coordinate columns")
        try:
            h = values.to_numpy(dtype=np.float64)
        except ValueError as exc:
            raise GraphFormatError(str(path), None, f"non-numeric latent coordinate ({exc})") from exc
        return LatentMatrix(h, tuple(frame["node_id"]))

    def save_loss_history(self, path: Path, totals: tuple[float, ...], parts: tuple[dict[str, float], ...]) -> Path:
        frame = pd.DataFrame(list(parts), columns=LOSS_COLUMNS[2:])
        frame.insert(0, "total", list(totals))
        frame.insert(0, "iteration", np.arange(len(totals)))
        return self.write_frame(path, frame)
