from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np

from app.core.exceptions import DimensionMismatchError, NumericError

LAYERS: tuple[str, ...] = ("enc_adj", "enc_attr", "enc_joint", "dec_adj", "dec_attr")


@dataclass(frozen=True)
class Architecture:
    """
    Layer sizes of the joint autoencoder.

    enc_adj   : n -> hidden_adj              (rectified)
    enc_attr  : d -> hidden_attr             (rectified)
    enc_joint : hidden_adj + hidden_attr -> latent_dim (identity)
    dec_adj   : latent_dim -> n              (logistic)
    dec_attr  : latent_dim -> d              (logistic)
    """
    n: int
    d: int
    hidden_adj: int
    hidden_attr: int
    latent_dim: int

    def __post_init__(self) -> None:
        for name, value in vars(self).items():
            if value < 1:
                raise DimensionMismatchError(f"layer size {name} must be positive, got {value}")

    def layer_shapes(self) -> dict[str, tuple[int, int]]:
        return {
            "enc_adj": (self.n, self.hidden_adj),
            "enc_attr": (self.d, self.hidden_attr),
            "enc_joint": (self.hidden_adj + self.hidden_attr, self.latent_dim),
            "dec_adj": (self.latent_dim, self.n),
            "dec_attr": (self.latent_dim, self.d),
        }


@dataclass(eq=False)
class ModelParams:
    """
    Weights and biases of every layer, in row-vector convention: out = inp @ W + b.

    The same container holds gradients, which share the parameter shapes.
    """
    arch: Architecture
    weights: dict[str, np.ndarray]
    biases: dict[str, np.ndarray]

    def __post_init__(self) -> None:
        for name, (fan_in, fan_out) in self.arch.layer_shapes().items():
            if name not in self.weights or name not in self.biases:
                raise DimensionMismatchError(f"missing parameters for layer {name}")
            if self.weights[name].shape != (fan_in, fan_out):
                raise DimensionMismatchError(
                    f"{name} weight has shape {self.weights[name].shape}, expected {(fan_in, fan_out)}"
                )
            if self.biases[name].shape != (fan_out,):
                raise DimensionMismatchError(
                    f"{name} bias has shape {self.biases[name].shape}, expected {(fan_out,)}"
                )
            entries = np.concatenate([self.weights[name].ravel(), self.biases[name].ravel()])
            bad = entries[~np.isfinite(entries)]
            if bad.size:
                raise NumericError(f"non-finite entries in layer {name}", float(bad[0]))

    def tensors(self) -> Iterator[tuple[str, np.ndarray]]:
        """Yield ('weights.<layer>' | 'biases.<layer>', array) in a fixed order."""
        for name in LAYERS:
            yield f"weights.{name}", self.weights[name]
            yield f"biases.{name}", self.biases[name]

    def copy(self) -> "ModelParams":
        return ModelParams(
            self.arch,
            {k: v.copy() for k, v in self.weights.items()},
            {k: v.copy() for k, v in self.biases.items()},
        )

    def zeros_like(self) -> "ModelParams":
        return ModelParams(
            self.arch,
            {k: np.zeros_like(v) for k, v in self.weights.items()},
            {k: np.zeros_like(v) for k, v in self.biases.items()},
        )

    def step(self, grads: "ModelParams", learning_rate: float) -> None:
        """In-place gradient-descent update."""
        for name in LAYERS:
            self.weights[name] -= learning_rate * grads.weights[name]
            self.biases[name] -= learning_rate * grads.biases[name]
