from pathlib import Path

from app.core.config import Settings
from app.core.exceptions import DataError, DimensionMismatchError
from app.core.models import BinaryAttributedGraph, LatentMatrix
from app.core.schemas import Checkpoint
from app.repositories import ModelRepository
from app.services.base_service import BaseService
from app.services.trainer import TrainingOutcome, embed, train

CHECKPOINT_FILE = "checkpoint.json"
LATENT_FILE = "latent.csv"
LOSS_HISTORY_FILE = "loss_history.csv"


class ModelService(BaseService[Checkpoint]):
    """Training stage: fits the joint autoencoder and exports H."""

    def __init__(self, settings: Settings):
        self.repository: ModelRepository = ModelRepository()
        super().__init__(self.repository, settings)

    def train(self, graph: BinaryAttributedGraph | None = None) -> TrainingOutcome:
        """
        Train on the run's graph and persist checkpoint, latent matrix and loss history.
        Args:
            graph (BinaryAttributedGraph | None): Graph already in memory; read
                from the run directory when omitted.
        Returns:
            TrainingOutcome: The trained model and its embedding.
        """
        cfg = self.settings.train
        with self.stage("train") as outputs:
            graph = graph or self.load_graph()
            outcome = train(graph, self.settings.loss, cfg)
            outputs.append(
                self.repository.save_checkpoint(self.output_dir / CHECKPOINT_FILE, outcome.params, cfg.seed, cfg.epochs)
            )
            outputs.append(self.repository.save_latent(self.output_dir / LATENT_FILE, outcome.latent))
            outputs.append(
                self.repository.save_loss_history(
                    self.output_dir / LOSS_HISTORY_FILE, outcome.loss_history, outcome.parts_history
                )
            )
        return outcome

    def checkpoint_path(self) -> Path:
        return Path(self.settings.paths.checkpoint_file or self.output_dir / CHECKPOINT_FILE)

    def embed_checkpoint(self, graph: BinaryAttributedGraph | None = None) -> LatentMatrix:
        """
        Re-export H from a saved checkpoint without training.
        Raises:
            DataError: If the checkpoint is missing.
            DimensionMismatchError: If the checkpoint was trained on a graph of another shape.
        """
        with self.stage("embed") as outputs:
            graph = graph or self.load_graph()
            path = self.checkpoint_path()
            if not path.is_file():
                raise DataError(f"Checkpoint {path} not found; run `train` or pass --checkpoint")
            params, _ = self.repository.load_params(path)
            if (params.arch.n, params.arch.d) != (graph.n, graph.d):
                raise DimensionMismatchError(
                    f"{path} expects {params.arch.n} nodes and {params.arch.d} attributes, "
                    f"the graph has {graph.n} and {graph.d}"
                )
            latent = embed(params, graph, self.settings.train.chunk_size)
            outputs.append(self.repository.save_latent(self.output_dir / LATENT_FILE, latent))
        return latent
