from .base_repo import BaseRepository, sha256_of
from .cluster import ClusterRepository
from .config import CONFIG_NAME, SettingsRepository
from .evaluation import EvaluationRepository
from .graph import GraphRepository
from .injection import InjectionRepository
from .manifest import MANIFEST_NAME, ManifestRepository
from .model import ModelRepository
from .report import ReportRepository

__all__ = ["BaseRepository", "ClusterRepository", "EvaluationRepository", "GraphRepository",
           "InjectionRepository", "ManifestRepository", "ModelRepository", "ReportRepository",
           "SettingsRepository", "CONFIG_NAME", "MANIFEST_NAME", "sha256_of"]
