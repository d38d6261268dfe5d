from app.core.schemas.graph import GraphSnapshot
from app.core.schemas.model import (
    Sampler,
    SimTarget,
    LossWeights,
    TrainConfig,
    Checkpoint,
    CheckpointTensor,
)
from app.core.schemas.cluster import ClusterConfig, ClusterRanking
from app.core.schemas.injection import BackgroundSpec, InjectionSpec
from app.core.schemas.search import (
    FloatRange,
    Choice,
    SearchSpace,
    TrialConfig,
    TrialRecord,
    SearchResult,
    SweepConfig,
    SweepRow,
    BestConfig,
)
from app.core.schemas.report import (
    FingerprintConfig,
    HashtagFingerprint,
    ClusteringFingerprint,
    AuthorityScore,
    ClusterReportEntry,
    ReferenceSample,
    RunMetadata,
    ClusterReport,
)
from app.core.schemas.evaluation import DetectionScore, BaselineExport, EvaluationReport
from app.core.schemas.manifest import Manifest, StageRecord, StageStatus

__all__ = [
    # Graph schemas
    "GraphSnapshot",
    # Model schemas
    "Sampler",
    "SimTarget",
    "LossWeights",
    "TrainConfig",
    "Checkpoint",
    "CheckpointTensor",
    # Cluster schemas
    "ClusterConfig",
    "ClusterRanking",
    # Injection and search schemas
    "BackgroundSpec",
    "InjectionSpec",
    "FloatRange",
    "Choice",
    "SearchSpace",
    "TrialConfig",
    "TrialRecord",
    "SearchResult",
    "SweepConfig",
    "SweepRow",
    "BestConfig",
    # Report schemas
    "FingerprintConfig",
    "HashtagFingerprint",
    "ClusteringFingerprint",
    "AuthorityScore",
    "ClusterReportEntry",
    "ReferenceSample",
    "RunMetadata",
    "ClusterReport",
    # Evaluation schemas
    "DetectionScore",
    "BaselineExport",
    "EvaluationReport",
    # Manifest schemas
    "Manifest",
    "StageRecord",
    "StageStatus",
]
