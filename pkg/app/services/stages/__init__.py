from app.services.stages.cluster import ClusterService
from app.services.stages.evaluation import EvaluationService
from app.services.stages.graph import GraphService
from app.services.stages.model import ModelService
from app.services.stages.pipeline import PipelineService
from app.services.stages.report import ReportService
from app.services.stages.search import SearchService

__all__ = ["ClusterService", "EvaluationService", "GraphService", "ModelService", "PipelineService",
           "ReportService", "SearchService"]
