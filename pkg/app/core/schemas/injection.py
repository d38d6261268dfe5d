from pydantic import BaseModel, Field, ConfigDict


class BackgroundSpec(BaseModel):
    """
    Parameters of a generated directed Erdős–Rényi background graph.
    Every ordered pair (i, j), i != j, is an edge with probability `edge_p`;
    every node/attribute entry is active with probability `attr_p`.
    """
    n: int = Field(1000, ge=1, description="Number of nodes.")
    d: int = Field(200, ge=1, description="Number of attributes.")
    edge_p: float = Field(0.01, ge=0, le=1, description="Directed edge probability.")
    attr_p: float = Field(0.02, ge=0, le=1, description="Attribute activation probability.")
    seed: int = Field(0, description="Generator seed.")

    model_config = ConfigDict(frozen=True, extra="forbid")


class InjectionSpec(BaseModel):
    """
    Planted dense sub-block parameters.

    Each block is a random set of `block_size` nodes whose ordered pairs gain
    edges with probability `adj_density`, and whose members activate a set of
    `hashtags_per_block` attributes with probability `attr_density`. The
    attribute set is drawn from the smoothed and sharpened global usage
    distribution.
    """
    num_blocks: int = Field(2, ge=1)
    block_size: int = Field(50, ge=2)
    adj_density: float = Field(0.4, ge=0, le=1)
    attr_density: float = Field(0.4, ge=0, le=1)
    smoothing_k: float = Field(1.0, gt=0, description="Add-k constant added to the attribute usage counts.")
    sharpen_lambda: float = Field(10.0, ge=0, description="Exponent rate of the sharpening exp(lambda * p).")
    hashtags_per_block: int = Field(20, ge=1)
    seed: int = Field(0)

    model_config = ConfigDict(frozen=True, extra="forbid")
