from .graph import BinaryAttributedGraph, NodeSubset
from .params import LAYERS, Architecture, ModelParams
from .embedding import DistanceKind, DistanceMatrix, LatentMatrix
from .detection import ClusterResult, GroundTruth, GreedyResult

__all__ = [
    "BinaryAttributedGraph",
    "NodeSubset",
    "LAYERS",
    "Architecture",
    "ModelParams",
    "DistanceKind",
    "DistanceMatrix",
    "LatentMatrix",
    "ClusterResult",
    "GroundTruth",
    "GreedyResult",
]
