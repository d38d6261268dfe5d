from app.core.config import Settings
from app.core.exceptions import DataError, DimensionMismatchError
from app.core.models import BinaryAttributedGraph, ClusterResult
from app.core.schemas import ClusterRanking
from app.repositories import ClusterRepository, ModelRepository
from app.services.base_service import BaseService
from app.services.clustering import detect_clusters, ranking_entries
from app.services.stages.model import LATENT_FILE

LABELS_FILE = "labels.csv"
RANKING_FILE = "ranking.json"


class ClusterService(BaseService[list[ClusterRanking]]):
    """Clustering stage: reduces H, runs DBSCAN and ranks clusters by induced density."""

    def __init__(self, settings: Settings):
        self.repository: ClusterRepository = ClusterRepository()
        super().__init__(self.repository, settings)
        self.models = ModelRepository()

    def cluster(self, graph: BinaryAttributedGraph | None = None) -> ClusterResult:
        """
        Cluster the exported latent matrix and write labels and ranking.
        Raises:
            DataError: If the latent export is missing.
            DimensionMismatchError: If H was computed on another graph.
        """
        with self.stage("cluster") as outputs:
            graph = graph or self.load_graph()
            latent_path = self.output_dir / LATENT_FILE
            if not latent_path.is_file():
                raise DataError(f"Latent matrix {latent_path} not found; run `train` first")
            latent = self.models.load_latent(latent_path)
            if latent.node_ids != graph.node_ids:
                raise DimensionMismatchError(f"{latent_path} was not computed on the current graph")
            result = detect_clusters(graph, latent, self.settings.cluster)
            outputs.append(self.repository.save_labels(self.output_dir / LABELS_FILE, graph.node_ids, result.labels))
            outputs.append(self.repository.save(self.output_dir / RANKING_FILE, ranking_entries(graph, result)))
        return result
