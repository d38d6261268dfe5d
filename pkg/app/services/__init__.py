from app.services.base_service import BaseService
from app.services.stages import (
    ClusterService,
    EvaluationService,
    GraphService,
    ModelService,
    PipelineService,
    ReportService,
    SearchService,
)
__all__ = ["BaseService", "ClusterService", "EvaluationService", "GraphService", "ModelService",
           "PipelineService", "ReportService", "SearchService"]
