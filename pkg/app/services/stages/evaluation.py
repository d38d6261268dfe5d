import logging
from pathlib import Path

from app.core.config import Settings
from app.core.exceptions import DataError
from app.core.schemas import BaselineExport, EvaluationReport
from app.repositories import ClusterRepository, EvaluationRepository, InjectionRepository
from app.services.base_service import GRAPH_FILE, BaseService
from app.services.baseline import baseline_predict, greedy_densest
from app.services.clustering import rank_clusters
from app.services.evaluation import detection_scores, predict_anomalies
from app.services.stages.cluster import LABELS_FILE
from app.services.stages.graph import GROUND_TRUTH_FILE

logger = logging.getLogger(__name__)

EVAL_FILE = "eval.json"
BASELINE_FILE = "baseline.json"


class EvaluationService(BaseService[EvaluationReport]):
    """Scores a finished run and the greedy baseline against planted ground truth."""

    def __init__(self, settings: Settings):
        self.repository: EvaluationRepository = EvaluationRepository()
        super().__init__(self.repository, settings)
        self.clusters = ClusterRepository()
        self.injections = InjectionRepository()

    @property
    def run_dir(self) -> Path:
        return Path(self.settings.paths.run_dir or self.output_dir)

    def ground_truth_path(self) -> Path:
        return Path(self.settings.paths.ground_truth_file or self.run_dir / GROUND_TRUTH_FILE)

    def evaluate(self) -> EvaluationReport:
        """
        Precision, recall and F1 of the run's prediction and of greedy peeling.
        Returns:
            EvaluationReport: Scores of both, with the t and k used.
        Raises:
            DataError: If labels or ground truth are missing.
        """
        paths, cfg = self.settings.paths, self.settings.cluster
        truth_path = self.ground_truth_path()
        if not truth_path.is_file():
            raise DataError(f"Missing ground truth {truth_path}; eval needs an injected run or --ground-truth")
        with self.stage("eval") as outputs:
            graph = self.graphs.load_graph(Path(paths.graph_file or self.run_dir / GRAPH_FILE))
            labels_path = self.run_dir / LABELS_FILE
            if not labels_path.is_file():
                raise DataError(f"Cluster labels {labels_path} not found; run `cluster` first")
            labels = self.clusters.load_labels(labels_path, graph.node_ids)
            truth = self.injections.load_ground_truth(truth_path, graph.node_ids)

            prediction = predict_anomalies(rank_clusters(graph, labels, cfg.k, cfg.t), cfg.t, cfg.k)
            greedy = greedy_densest(graph)
            report = EvaluationReport(
                pipeline=detection_scores(prediction, truth),
                baseline=detection_scores(baseline_predict(graph, greedy), truth),
                t=cfg.t,
                k=cfg.k,
            )
            logger.info("Pipeline F1 %.4f, baseline F1 %.4f", report.pipeline.f1, report.baseline.f1)
            outputs.append(self.repository.save(self.output_dir / EVAL_FILE, report))
            outputs.append(
                self.repository.save_baseline(
                    self.output_dir / BASELINE_FILE,
                    BaselineExport(
                        selected_node_ids=[graph.node_ids[i] for i in greedy.selected],
                        best_score=greedy.best_score,
                    ),
                )
            )
        return report
