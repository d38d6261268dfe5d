from typing_extensions import Self

from pydantic import BaseModel, Field, ConfigDict, model_validator

from .cluster import ClusterConfig
from .model import LossWeights, TrainConfig


class FloatRange(BaseModel):
    """A continuous range, sampled uniformly or log-uniformly."""
    model_config = ConfigDict(extra="forbid")

    low: float
    high: float
    log: bool = False

    @model_validator(mode="after")
    def check_bounds(self) -> Self:
        if self.low > self.high:
            raise ValueError("low must not exceed high")
        if self.log and self.low <= 0:
            raise ValueError("log-uniform ranges need a positive lower bound")
        return self


class Choice(BaseModel):
    """A discrete list of values, sampled uniformly."""
    model_config = ConfigDict(extra="forbid")

    values: list[int | float | str] = Field(min_length=1)


Param = FloatRange | Choice


def _default_loss_space() -> dict[str, Param]:
    return {
        "w_a": FloatRange(low=0.1, high=10.0, log=True),
        "w_x": FloatRange(low=0.1, high=10.0, log=True),
        "w_recon": FloatRange(low=0.1, high=10.0, log=True),
        "w_sim": FloatRange(low=0.1, high=10.0, log=True),
        "lam": FloatRange(low=0.1, high=5.0, log=True),
        "l2": FloatRange(low=1e-6, high=1e-2, log=True),
        "attention_beta": Choice(values=[1.0, 2.0, 5.0, 10.0]),
    }


def _default_train_space() -> dict[str, Param]:
    return {
        "learning_rate": FloatRange(low=1e-4, high=1e-2, log=True),
        "epochs": Choice(values=[500, 1000, 2000]),
        "batch_size": Choice(values=[32, 64, 128]),
        "latent_dim": Choice(values=[8, 16, 32]),
        "sampler": Choice(values=["uniform", "similarity_weighted"]),
    }


def _default_cluster_space() -> dict[str, Param]:
    return {
        "eps": FloatRange(low=0.02, high=1.0, log=True),
        "min_pts": Choice(values=[3, 5, 10, 20]),
        "t": FloatRange(low=0.05, high=0.5),
        "k": Choice(values=[1, 2, 3, 5, 10]),
    }


class SearchSpace(BaseModel):
    """
    Random-search space over the loss, training and clustering sections.

    Each section maps a field name of the corresponding config model to a
    range or a choice list. Fields not listed keep their base value.
    """
    trials: int = Field(30, ge=1, description="Number of random-search trials.")
    workers: int = Field(1, ge=1, description="Trials evaluated in parallel.")
    loss: dict[str, Param] = Field(default_factory=_default_loss_space)
    train: dict[str, Param] = Field(default_factory=_default_train_space)
    cluster: dict[str, Param] = Field(default_factory=_default_cluster_space)

    model_config = ConfigDict(extra="forbid")

    @model_validator(mode="after")
    def check_fields(self) -> Self:
        for section, model in (("loss", LossWeights), ("train", TrainConfig), ("cluster", ClusterConfig)):
            unknown = set(getattr(self, section)) - set(model.model_fields)
            if unknown:
                raise ValueError(f"unknown {section} fields in search space: {sorted(unknown)}")
        return self


class TrialConfig(BaseModel):
    """The full hyperparameter set evaluated by one pipeline run."""
    loss: LossWeights = LossWeights()
    train: TrainConfig = TrainConfig()
    cluster: ClusterConfig = ClusterConfig()

    model_config = ConfigDict(frozen=True, extra="forbid")


class TrialRecord(BaseModel):
    trial: int = Field(ge=0)
    config: TrialConfig
    f1: float = Field(ge=0, le=1)
    runtime_s: float = Field(ge=0)
    diverged: bool = False


class SearchResult(BaseModel):
    """Best configuration and the full trial log of a random search."""
    best_config: TrialConfig
    best_f1: float = Field(ge=0, le=1)
    best_trial: int = Field(ge=0)
    trials: list[TrialRecord]


class SweepConfig(BaseModel):
    """Density sweep protocol: injected density values and benchmark seeds."""
    densities: list[float] = Field(
        default_factory=lambda: [round(0.1 + 0.05 * i, 2) for i in range(9)],
        min_length=1,
    )
    seeds: list[int] = Field(default_factory=lambda: [0, 1, 2, 3, 4], min_length=1)

    model_config = ConfigDict(extra="forbid")


class SweepRow(BaseModel):
    density: float
    pipeline_f1: float
    baseline_f1: float
    pipeline_f1_runs: list[float]
    baseline_f1_runs: list[float]


class BestConfig(BaseModel):
    """The winning trial of a search, as reused by later runs."""
    config: TrialConfig
    f1: float = Field(ge=0, le=1)
    trial: int = Field(ge=0)
