from pathlib import Path

import pandas as pd

from app.core.schemas import ClusterReport, ClusteringFingerprint, HashtagFingerprint
from app.repositories.base_repo import BaseRepository

REFERENCE_ID = -1


def _hashtag_rows(fp: HashtagFingerprint, cluster_id: int) -> list[dict]:
    return [
        {"cluster_id": cluster_id, "rank": r, "hashtag": name, "relative_frequency": freq}
        for r, (name, freq) in enumerate(zip(fp.hashtag_names, fp.relative_frequency))
    ]


def _clustering_rows(fp: ClusteringFingerprint, cluster_id: int) -> list[dict]:
    return [
        {"cluster_id": cluster_id, "bin_low": fp.bin_edges[b], "bin_high": fp.bin_edges[b + 1], "density": value}
        for b, value in enumerate(fp.density)
    ]


class ReportRepository(BaseRepository[ClusterReport]):
    """
    The cluster report document plus flat CSV views of its fingerprints and
    authority scores. The reference sample appears in the CSVs with cluster id -1.
    """

    def __init__(self):
        super().__init__(ClusterReport)

    def save_report(self, directory: Path, report: ClusterReport) -> dict[str, Path]:
        directory = Path(directory)
        hashtags, clustering, authority = [], [], []
        for entry in report.clusters:
            hashtags += _hashtag_rows(entry.hashtag_fingerprint, entry.id)
            clustering += _clustering_rows(entry.clustering_fingerprint, entry.id)
            authority += [
                {"cluster_id": entry.id, "node_id": a.node_id, "authority": a.score} for a in entry.authority
            ]
        if report.reference is not None:
            if report.reference.hashtag_fingerprint is not None:
                hashtags += _hashtag_rows(report.reference.hashtag_fingerprint, REFERENCE_ID)
            if report.reference.clustering_fingerprint is not None:
                clustering += _clustering_rows(report.reference.clustering_fingerprint, REFERENCE_ID)
        return {
            "report.json": self.save(directory / "report.json", report),
            "hashtag_fingerprint.csv": self.write_frame(
                directory / "hashtag_fingerprint.csv",
                pd.DataFrame(hashtags, columns=["cluster_id", "rank", "hashtag", "relative_frequency"]),
            ),
            "clustering_fingerprint.csv": self.write_frame(
                directory / "clustering_fingerprint.csv",
                pd.DataFrame(clustering, columns=["cluster_id", "bin_low", "bin_high", "density"]),
            ),
            "authority.csv": self.write_frame(
                directory / "authority.csv",
                pd.DataFrame(authority, columns=["cluster_id", "node_id", "authority"]),
            ),
        }
