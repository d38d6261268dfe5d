from app._compat import StrEnum

from pydantic import BaseModel, Field, ConfigDict


class Sampler(StrEnum):
    UNIFORM = "uniform"
    SIMILARITY_WEIGHTED = "similarity_weighted"


class SimTarget(StrEnum):
    JACCARD_SIMILARITY = "jaccard_similarity"
    JACCARD_DISTANCE = "jaccard_distance"


class LossWeights(BaseModel):
    """
    Weights of the joint reconstruction + similarity objective.

    The attention matrices of the reconstruction terms are derived from
    `attention_beta`: an entry weighs `attention_beta` where the target is 1
    and 1 elsewhere, so a value of 1 turns attention off.
    """
    w_a: float = Field(1.0, ge=0, description="Weight of the adjacency terms (reconstruction and similarity).")
    w_x: float = Field(1.0, ge=0, description="Weight of the attribute terms (reconstruction and similarity).")
    w_recon: float = Field(1.0, ge=0, description="Weight of the reconstruction loss.")
    w_sim: float = Field(1.0, ge=0, description="Weight of the similarity loss.")
    lam: float = Field(1.0, ge=0, description="Decay rate of exp(-lam * latent distance).")
    l2: float = Field(1e-4, ge=0, description="L2 penalty on every weight matrix.")
    attention_beta: float = Field(5.0, ge=1, description="Reconstruction weight of nonzero targets.")
    sim_target: SimTarget = Field(
        SimTarget.JACCARD_SIMILARITY,
        description="Whether exp(-lam * D) is matched against Jaccard similarity or, literally, Jaccard distance.",
    )

    model_config = ConfigDict(frozen=True, extra="forbid")


class TrainConfig(BaseModel):
    """Optimisation, sampling and architecture settings of the joint autoencoder."""
    epochs: int = Field(2000, ge=1, description="Number of sampled-batch SGD iterations.")
    batch_size: int = Field(64, ge=2, description="Nodes per sampled batch (pairwise losses need pairs).")
    learning_rate: float = Field(0.01, gt=0, description="Fixed SGD step size.")
    seed: int = Field(0, description="Seed of parameter initialisation and batch sampling.")
    sampler: Sampler = Field(Sampler.SIMILARITY_WEIGHTED, description="Distribution of the non-anchor batch nodes.")
    latent_dim: int = Field(32, ge=1, description="Dimension k of the joint embedding H.")
    hidden_adj: int = Field(128, ge=1, description="Width of the adjacency encoder.")
    hidden_attr: int = Field(64, ge=1, description="Width of the attribute encoder.")
    chunk_size: int = Field(512, ge=1, description="Rows per forward chunk when embedding all nodes.")
    log_every: int = Field(100, ge=1, description="Training progress is logged every this many iterations.")

    model_config = ConfigDict(frozen=True, extra="forbid")


class CheckpointTensor(BaseModel):
    shape: list[int]
    values: list[float] = Field(description="Row-major flattened entries.")


class Checkpoint(BaseModel):
    """
    Serialized model parameters.
    Stores the architecture, every weight and bias tensor, the seed and
    the number of completed training iterations.
    """
    arch: dict[str, int]
    seed: int
    iterations: int = Field(ge=0)
    weights: dict[str, CheckpointTensor]
    biases: dict[str, CheckpointTensor]
