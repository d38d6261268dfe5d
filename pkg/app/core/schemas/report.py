from pydantic import BaseModel, Field, ConfigDict


class FingerprintConfig(BaseModel):
    m: int = Field(30, ge=1, description="Number of globally popular hashtags in a hashtag fingerprint.")
    bins: int = Field(20, ge=1, description="Equal-width bins of the clustering-coefficient histogram.")
    sample_seed: int = Field(0, description="Seed of the random user sample used as reference fingerprint.")

    model_config = ConfigDict(frozen=True, extra="forbid")


class HashtagFingerprint(BaseModel):
    """
    Relative usage frequency of the globally most popular hashtags within a cluster.
    `relative_frequency[j]` is the share of members that used `hashtag_names[j]`.
    """
    cluster_id: int
    hashtag_names: list[str]
    relative_frequency: list[float]


class ClusteringFingerprint(BaseModel):
    """
    Probability density of clustering coefficients on the cluster-induced subgraph.
    The raw per-node coefficients are kept so the density can be re-smoothed.
    """
    cluster_id: int
    bin_edges: list[float]
    density: list[float]
    coefficients: list[float] = Field(default_factory=list)


class AuthorityScore(BaseModel):
    node_id: str
    score: float = Field(ge=0)


class ClusterReportEntry(BaseModel):
    id: int
    size: int = Field(ge=1)
    density: float = Field(ge=0, le=1)
    hashtag_fingerprint: HashtagFingerprint
    clustering_fingerprint: ClusteringFingerprint
    authority: list[AuthorityScore]
    edges: list[tuple[str, str]]


class ReferenceSample(BaseModel):
    """Fingerprints of a uniformly sampled set of users, read next to the clusters."""
    size: int = Field(ge=0)
    node_ids: list[str]
    hashtag_fingerprint: HashtagFingerprint | None = None
    clustering_fingerprint: ClusteringFingerprint | None = None


class RunMetadata(BaseModel):
    n: int
    d: int
    num_clusters: int
    k: int
    t: float
    m: int
    bins: int
    config_hash: str | None = None


class ClusterReport(BaseModel):
    """One report document per run, listing the top-k clusters in rank order."""
    run_metadata: RunMetadata
    clusters: list[ClusterReportEntry] = Field(default_factory=list)
    reference: ReferenceSample | None = None
