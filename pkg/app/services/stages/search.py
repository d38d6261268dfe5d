import logging

from app.core.config import Settings
from app.core.exceptions import ConfigurationError
from app.core.models import BinaryAttributedGraph
from app.core.schemas import BestConfig, InjectionSpec, SearchResult, SweepConfig, SweepRow, TrialConfig
from app.repositories import InjectionRepository
from app.services.base_service import BaseService
from app.services.injection import generate_background
from app.services.search import density_sweep, random_search

logger = logging.getLogger(__name__)

TRIAL_LOG_FILE = "trial_log.csv"
BEST_CONFIG_FILE = "best_config.json"
SWEEP_FILE = "sweep.csv"


class SearchService(BaseService[BestConfig]):
    """
    Hyperparameter search and density sweep on synthetic injections.
    Both work on a clean graph: the --graph-file snapshot, a generated
    background when a background section is configured, or the run's graph.
    """

    def __init__(self, settings: Settings):
        self.repository: InjectionRepository = InjectionRepository()
        super().__init__(self.repository, settings)

    def clean_graph(self) -> BinaryAttributedGraph:
        if self.settings.paths.graph_file is None and self.settings.background is not None:
            return generate_background(self.settings.background)
        return self.load_graph()

    def injection_spec(self) -> InjectionSpec:
        if self.settings.injection is None:
            raise ConfigurationError("search and sweep need an injection section")
        return self.settings.injection

    def base_config(self) -> TrialConfig:
        return TrialConfig(loss=self.settings.loss, train=self.settings.train, cluster=self.settings.cluster)

    def search(self) -> SearchResult:
        """
        Random search over the configured space; writes the trial log and best config.
        Raises:
            ConfigurationError: If the injection or search section is missing.
        """
        spec, space = self.injection_spec(), self.settings.search
        if space is None:
            raise ConfigurationError("search needs a search section (config file or --trials)")
        with self.stage("search") as outputs:
            result = random_search(
                self.clean_graph(), spec, space, space.trials, spec.seed, self.base_config(), space.workers
            )
            outputs.append(self.repository.save_trial_log(self.output_dir / TRIAL_LOG_FILE, result))
            outputs.append(self.repository.save_best_config(self.output_dir / BEST_CONFIG_FILE, result))
        return result

    def sweep(self) -> list[SweepRow]:
        """
        Pipeline and baseline F1 per injected density. Uses the --best-config
        document when given, else the configured loss, train and cluster sections.
        """
        spec, sweep = self.injection_spec(), self.settings.sweep or SweepConfig()
        best_file = self.settings.paths.best_config_file
        with self.stage("sweep") as outputs:
            config = self.repository.load(best_file).config if best_file else self.base_config()
            rows = density_sweep(self.clean_graph(), spec, config, sweep.densities, sweep.seeds)
            outputs.append(self.repository.save_sweep(self.output_dir / SWEEP_FILE, rows))
        return rows
