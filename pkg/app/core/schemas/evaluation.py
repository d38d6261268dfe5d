from pydantic import BaseModel, Field


class DetectionScore(BaseModel):
    """Precision, recall and F1 of the anomaly class."""
    precision: float = Field(ge=0, le=1)
    recall: float = Field(ge=0, le=1)
    f1: float = Field(ge=0, le=1)
    predicted_positives: int = Field(ge=0)
    true_positives: int = Field(ge=0)


class BaselineExport(BaseModel):
    selected_node_ids: list[str]
    best_score: float = Field(ge=0)


class EvaluationReport(BaseModel):
    """Pipeline and greedy-baseline scores of one run against planted ground truth."""
    pipeline: DetectionScore
    baseline: DetectionScore
    t: float
    k: int
