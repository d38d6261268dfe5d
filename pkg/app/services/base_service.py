import logging
import time
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path
from typing import Generic, TypeVar

from app.core.config import Settings
from app.core.exceptions import DataError, DenseBlockError
from app.core.models import BinaryAttributedGraph
from app.repositories import BaseRepository, GraphRepository, ManifestRepository, SettingsRepository

SchemaType = TypeVar("SchemaType")

logger = logging.getLogger(__name__)

GRAPH_FILE = "graph.json"


class BaseService(Generic[SchemaType]):
    """
    Generic base of the pipeline stage services.

    A stage service reads its inputs from files, runs the algorithms of the
    services package on them and writes its outputs through its repository
    into the run directory (`settings.paths.output_dir`). Stages communicate
    only through those files, so every stage can be rerun on its own.
    """

    def __init__(self, repository: BaseRepository[SchemaType], settings: Settings):
        """
        Initialize the service with a repository instance and the resolved settings.
        Args:
            repository (BaseRepository): The repository responsible
                                         for the stage's artifacts.
            settings (Settings): Resolved run settings.
        """
        self.repository = repository
        self.settings = settings
        self.graphs = GraphRepository()
        self.manifests = ManifestRepository()
        self.configs = SettingsRepository()

    @property
    def output_dir(self) -> Path:
        return Path(self.settings.paths.output_dir)

    def graph_path(self) -> Path:
        """The graph a stage works on: an explicit snapshot, else the run directory's."""
        return Path(self.settings.paths.graph_file or self.output_dir / GRAPH_FILE)

    def load_graph(self) -> BinaryAttributedGraph:
        path = self.graph_path()
        if not path.is_file():
            raise DataError(f"Graph snapshot {path} not found; run `ingest` or pass --graph-file")
        return self.graphs.load_graph(path)

    @contextmanager
    def stage(self, name: str) -> Iterator[list[Path]]:
        """
        Run one pipeline stage under the run directory's MANIFEST.

        Yields the list the stage appends its output files to, which starts
        with the resolved settings written as config.json. On success the
        outputs are checksummed into the manifest; on failure the stage is
        marked failed, the error is tagged with the stage name and re-raised.
        """
        self.output_dir.mkdir(parents=True, exist_ok=True)
        manifest = self.manifests.open(self.output_dir, self.settings.config_hash(), self.settings.train.seed)
        self.manifests.start_stage(self.output_dir, manifest, name)
        outputs: list[Path] = [self.configs.save(self.configs.path(self.output_dir), self.settings)]
        started = time.perf_counter()
        logger.info("Stage %s started", name)
        try:
            yield outputs
        except DenseBlockError as exc:
            exc.stage = exc.stage or name
            self.manifests.fail_stage(self.output_dir, manifest, name, f"{type(exc).__name__}: {exc.detail}")
            logger.error("Stage %s failed: %s", name, exc.detail)
            raise
        except Exception as exc:
            self.manifests.fail_stage(self.output_dir, manifest, name, f"{type(exc).__name__}: {exc}")
            logger.error("Stage %s failed: %s", name, exc)
            raise
        self.manifests.finish_stage(self.output_dir, manifest, name, outputs)
        logger.info("Stage %s finished in %.2fs (%d outputs)", name, time.perf_counter() - started, len(outputs))
