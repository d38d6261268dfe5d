import logging

from app.core.config import Settings
from app.core.exceptions import DataError
from app.core.schemas import Manifest
from app.repositories import ManifestRepository
from app.services.base_service import GRAPH_FILE, BaseService
from app.services.stages.cluster import ClusterService
from app.services.stages.evaluation import EvaluationService
from app.services.stages.graph import GraphService
from app.services.stages.model import ModelService
from app.services.stages.report import ReportService

logger = logging.getLogger(__name__)


class PipelineService(BaseService[Manifest]):
    """
    The full run: ingest if needed, train, cluster, fingerprint, and
    evaluate when the run directory holds ground truth.
    """

    def __init__(self, settings: Settings):
        self.repository: ManifestRepository = ManifestRepository()
        super().__init__(self.repository, settings)
        self.graph_service = GraphService(settings)
        self.model_service = ModelService(settings)
        self.cluster_service = ClusterService(settings)
        self.report_service = ReportService(settings)
        self.evaluation_service = EvaluationService(settings)

    def run(self) -> Manifest:
        """
        Execute every stage in order; each one writes its outputs and its
        MANIFEST record before the next starts.
        Returns:
            Manifest: The run directory's final manifest.
        Raises:
            DataError: If no graph input is configured and the run directory has none.
        """
        paths = self.settings.paths
        if paths.edge_file is not None or paths.attribute_file is not None:
            graph = self.graph_service.ingest()
        elif paths.graph_file is not None:
            graph = self.graph_service.import_snapshot()
        elif (self.output_dir / GRAPH_FILE).is_file():
            graph = self.load_graph()
        else:
            raise DataError(f"No input graph: pass --edge-file/--attribute-file, --graph-file or ingest into {self.output_dir}")
        self.model_service.train(graph)
        self.cluster_service.cluster(graph)
        self.report_service.fingerprint(graph)
        if self.evaluation_service.ground_truth_path().is_file():
            self.evaluation_service.evaluate()
        manifest = self.repository.load(self.repository.path(self.output_dir))
        logger.info("Run finished in %s (complete=%s)", self.output_dir, manifest.complete)
        return manifest
