from dataclasses import dataclass

import numpy as np

from app.core.models import BinaryAttributedGraph, ClusterResult
from app.core.schemas import TrialConfig
from app.services.clustering import detect_clusters
from app.services.evaluation import predict_anomalies
from app.services.trainer import TrainingOutcome, train


@dataclass(frozen=True, eq=False)
class DetectionRun:
    training: TrainingOutcome
    clusters: ClusterResult
    prediction: np.ndarray


def run_detection(g: BinaryAttributedGraph, config: TrialConfig) -> DetectionRun:
    """Train, reduce, cluster, rank and flag the members of the dense top-k clusters."""
    training = train(g, config.loss, config.train)
    clusters = detect_clusters(g, training.latent, config.cluster)
    prediction = predict_anomalies(clusters, config.cluster.t, config.cluster.k)
    return DetectionRun(training, clusters, prediction)
