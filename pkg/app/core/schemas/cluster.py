from typing import Literal

from pydantic import BaseModel, Field, ConfigDict


class ClusterConfig(BaseModel):
    """
    Reduction, density-based clustering and ranking settings.
    `eps` is measured in the reduced space, after optional rescaling.
    """
    reducer: Literal["pca"] = Field("pca", description="Dimensionality reduction applied to H.")
    out_dims: int = Field(2, ge=1, description="Dimensions of the reduced embedding.")
    rescale: bool = Field(True, description="Divide the reduced embedding by the std of its first component.")
    eps: float = Field(0.5, gt=0, description="DBSCAN neighbourhood radius.")
    min_pts: int = Field(5, ge=1, description="DBSCAN core-point neighbourhood size (point itself included).")
    t: float = Field(0.3, ge=0, le=1, description="Density threshold of a dense cluster.")
    k: int = Field(10, ge=1, description="Number of densest clusters reported.")

    model_config = ConfigDict(frozen=True, extra="forbid")


class ClusterRanking(BaseModel):
    """
    One ranked cluster in the ranking report.

    Fields:
        cluster_id        — DBSCAN cluster label.
        size              — number of member nodes.
        induced_density   — directed density of the cluster-induced subgraph.
        above_threshold   — induced density reaches the threshold t.
        bipartite_density — density of the members x attribute_subset block.
        attribute_subset  — attributes used by at least a fraction t of the members.
        dense_subblock    — both the network and the bipartite density reach t.
    """
    cluster_id: int = Field(ge=0)
    size: int = Field(ge=1)
    induced_density: float = Field(ge=0, le=1)
    above_threshold: bool
    bipartite_density: float = Field(0.0, ge=0, le=1)
    attribute_subset: list[str] = Field(default_factory=list)
    dense_subblock: bool = False
