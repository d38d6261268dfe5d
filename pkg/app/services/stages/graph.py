from pathlib import Path

from app.core.config import Settings
from app.core.exceptions import ConfigurationError
from app.core.models import BinaryAttributedGraph, GroundTruth
from app.core.schemas import BackgroundSpec, GraphSnapshot
from app.repositories import GraphRepository, InjectionRepository
from app.services.base_service import GRAPH_FILE, BaseService
from app.services.injection import generate_background, inject

GROUND_TRUTH_FILE = "ground_truth.csv"


class GraphService(BaseService[GraphSnapshot]):
    """
    Stages that produce the run's graph snapshot: ingestion of TSV files,
    background generation and dense-block injection.
    """

    def __init__(self, settings: Settings):
        """Initialize GraphService with the graph and ground-truth repositories."""
        self.repository: GraphRepository = GraphRepository()
        super().__init__(self.repository, settings)
        self.injections = InjectionRepository()

    def ingest(self) -> BinaryAttributedGraph:
        """
        Load the configured edge and attribute TSVs and write the canonical snapshot.
        Returns:
            BinaryAttributedGraph: The ingested graph.
        Raises:
            ConfigurationError: If either input file is not configured.
        """
        paths = self.settings.paths
        if paths.edge_file is None or paths.attribute_file is None:
            raise ConfigurationError("ingest needs both --edge-file and --attribute-file")
        with self.stage("ingest") as outputs:
            graph = self.repository.load_tsv(paths.edge_file, paths.attribute_file)
            outputs.append(self.repository.save_graph(self.output_dir / GRAPH_FILE, graph))
        return graph

    def import_snapshot(self) -> BinaryAttributedGraph:
        """Copy an external snapshot (--graph-file) into the run directory."""
        with self.stage("ingest") as outputs:
            graph = self.load_graph()
            outputs.append(self.repository.save_graph(self.output_dir / GRAPH_FILE, graph))
        return graph

    def generate(self) -> BinaryAttributedGraph:
        """Write a random background graph as the run's snapshot."""
        spec = self.settings.background or BackgroundSpec()
        with self.stage("generate") as outputs:
            graph = generate_background(spec)
            outputs.append(self.repository.save_graph(self.output_dir / GRAPH_FILE, graph))
        return graph

    def inject(self) -> tuple[BinaryAttributedGraph, GroundTruth]:
        """
        Plant dense blocks into the clean graph and write the injected snapshot
        and its ground truth into the run directory.
        Raises:
            ConfigurationError: If no injection section is configured, or the
                clean graph would be overwritten by the injected one.
        """
        spec = self.settings.injection
        if spec is None:
            raise ConfigurationError("inject needs an injection section (config file or --num-blocks etc.)")
        target = self.output_dir / GRAPH_FILE
        if self.graph_path().resolve() == Path(target).resolve():
            raise ConfigurationError(
                f"inject would overwrite its clean input {target}; pass --graph-file and a different --output-dir"
            )
        with self.stage("inject") as outputs:
            injected, truth = inject(self.load_graph(), spec)
            outputs.append(self.repository.save_graph(target, injected))
            outputs.append(
                self.injections.save_ground_truth(self.output_dir / GROUND_TRUTH_FILE, injected.node_ids, truth)
            )
        return injected, truth
