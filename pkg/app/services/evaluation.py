import numpy as np
from sklearn.metrics import confusion_matrix, precision_recall_fscore_support

from app.core.exceptions import DimensionMismatchError
from app.core.models import ClusterResult, GroundTruth
from app.core.schemas import DetectionScore


def detection_scores(predicted: np.ndarray, truth: GroundTruth) -> DetectionScore:
    """
    Precision, recall and F1 of the anomaly class.
    Undefined ratios (no predicted positives, no true positives) are 0.
    Raises:
        DimensionMismatchError: If the prediction length differs from the truth.
    """
    predicted = np.asarray(predicted).astype(bool).astype(np.int8)
    actual = truth.anomaly_labels.astype(bool).astype(np.int8)
    if predicted.shape != actual.shape:
        raise DimensionMismatchError(f"prediction of length {predicted.size} vs truth of length {actual.size}")
    precision, recall, f1, _ = precision_recall_fscore_support(
        actual, predicted, average="binary", pos_label=1, zero_division=0
    )
    _, fp, _, tp = confusion_matrix(actual, predicted, labels=[0, 1]).ravel()
    return DetectionScore(
        precision=float(precision),
        recall=float(recall),
        f1=float(f1),
        predicted_positives=int(tp + fp),
        true_positives=int(tp),
    )


def f1_anomaly(predicted: np.ndarray, truth: GroundTruth) -> float:
    return detection_scores(predicted, truth).f1


def predict_anomalies(result: ClusterResult, t: float, k: int) -> np.ndarray:
    """Flag members of the k densest clusters whose induced density reaches t."""
    flagged = np.zeros(result.labels.size, dtype=np.int8)
    for cluster_id in result.ordering[:k]:
        if result.induced_densities[cluster_id] >= t:
            flagged[result.labels == cluster_id] = 1
    return flagged
