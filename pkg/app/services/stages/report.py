from app.core.config import Settings
from app.core.exceptions import DataError
from app.core.models import BinaryAttributedGraph
from app.core.schemas import ClusterReport
from app.repositories import ClusterRepository, ReportRepository
from app.services.base_service import BaseService
from app.services.clustering import rank_clusters
from app.services.fingerprint import cluster_report
from app.services.stages.cluster import LABELS_FILE


class ReportService(BaseService[ClusterReport]):
    """Fingerprint stage: builds the analyst report of the top-k clusters."""

    def __init__(self, settings: Settings):
        self.repository: ReportRepository = ReportRepository()
        super().__init__(self.repository, settings)
        self.clusters = ClusterRepository()

    def fingerprint(self, graph: BinaryAttributedGraph | None = None) -> ClusterReport:
        cluster_cfg, fp_cfg = self.settings.cluster, self.settings.fingerprint
        with self.stage("fingerprint") as outputs:
            graph = graph or self.load_graph()
            labels_path = self.output_dir / LABELS_FILE
            if not labels_path.is_file():
                raise DataError(f"Cluster labels {labels_path} not found; run `cluster` first")
            labels = self.clusters.load_labels(labels_path, graph.node_ids)
            result = rank_clusters(graph, labels, cluster_cfg.k, cluster_cfg.t)
            report = cluster_report(
                graph, result, fp_cfg.m, fp_cfg.bins, fp_cfg.sample_seed, self.settings.config_hash()
            )
            outputs.extend(self.repository.save_report(self.output_dir, report).values())
        return report
