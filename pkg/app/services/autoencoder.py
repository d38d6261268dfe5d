"""
Joint autoencoder over adjacency rows and attribute rows.

Adjacency rows and attribute rows are encoded separately, concatenated,
encoded again into the joint embedding H, and decoded back into both inputs.
The objective combines attention-weighted reconstruction errors with a
similarity term matching exp(-lam * ||h_i - h_j||) against the Jaccard
structure of the input rows within a batch, plus an L2 penalty on all weights.
Gradients are derived by hand; see tests/test_autoencoder.py for the
finite-difference check.
"""
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
from scipy.special import expit

from app.core.exceptions import ConfigurationError, DimensionMismatchError, NumericError
from app.core.models import LAYERS, Architecture, BinaryAttributedGraph, ModelParams
from app.core.schemas import LossWeights, SimTarget, TrainConfig
from app.services.similarity import pairwise_euclidean, pairwise_jaccard

LOSS_PARTS: tuple[str, ...] = ("recon_A", "recon_X", "sim_A", "sim_X", "reg")


def architecture_for(g: BinaryAttributedGraph, cfg: TrainConfig) -> Architecture:
    return Architecture(
        n=g.n,
        d=g.d,
        hidden_adj=cfg.hidden_adj,
        hidden_attr=cfg.hidden_attr,
        latent_dim=cfg.latent_dim,
    )


def init_params(arch: Architecture, seed: int) -> ModelParams:
    """
    Draw initial parameters: weights ~ N(0, 1/fan_in), biases zero.
    Layers are drawn in a fixed order, so a seed fully determines the result.
    """
    rng = np.random.default_rng(seed)
    weights: dict[str, np.ndarray] = {}
    biases: dict[str, np.ndarray] = {}
    shapes = arch.layer_shapes()
    for name in LAYERS:
        fan_in, fan_out = shapes[name]
        weights[name] = rng.normal(0.0, np.sqrt(1.0 / fan_in), size=(fan_in, fan_out))
        biases[name] = np.zeros(fan_out)
    return ModelParams(arch, weights, biases)


@dataclass
class _Activations:
    z_adj: np.ndarray
    z_attr: np.ndarray
    joint: np.ndarray
    h: np.ndarray
    a_hat: np.ndarray
    x_hat: np.ndarray


def _dense(batch: sp.spmatrix | np.ndarray) -> np.ndarray:
    if sp.issparse(batch):
        return batch.toarray().astype(np.float64)
    return np.asarray(batch, dtype=np.float64)


def _check_batch(params: ModelParams, a: np.ndarray, x: np.ndarray) -> None:
    arch = params.arch
    if a.ndim != 2 or x.ndim != 2 or a.shape[0] != x.shape[0]:
        raise DimensionMismatchError(f"batch shapes {a.shape} and {x.shape} do not pair up")
    if a.shape[1] != arch.n or x.shape[1] != arch.d:
        raise DimensionMismatchError(
            f"batch widths ({a.shape[1]}, {x.shape[1]}) do not match model inputs ({arch.n}, {arch.d})"
        )


def _activations(params: ModelParams, a: np.ndarray, x: np.ndarray) -> _Activations:
    w, b = params.weights, params.biases
    z_adj = a @ w["enc_adj"] + b["enc_adj"]
    z_attr = x @ w["enc_attr"] + b["enc_attr"]
    joint = np.hstack([np.maximum(z_adj, 0.0), np.maximum(z_attr, 0.0)])
    h = joint @ w["enc_joint"] + b["enc_joint"]
    a_hat = expit(h @ w["dec_adj"] + b["dec_adj"])
    x_hat = expit(h @ w["dec_attr"] + b["dec_attr"])
    return _Activations(z_adj, z_attr, joint, h, a_hat, x_hat)


def forward(
    params: ModelParams,
    a_batch: sp.spmatrix | np.ndarray,
    x_batch: sp.spmatrix | np.ndarray,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Embed and reconstruct a batch of nodes.
    Args:
        params (ModelParams): Model parameters.
        a_batch: b x n adjacency rows.
        x_batch: b x d attribute rows of the same nodes.
    Returns:
        tuple: (h: b x k, a_hat: b x n, x_hat: b x d), reconstructions in (0, 1).
    Raises:
        DimensionMismatchError: If batch shapes do not match the model.
    """
    a, x = _dense(a_batch), _dense(x_batch)
    _check_batch(params, a, x)
    act = _activations(params, a, x)
    return act.h, act.a_hat, act.x_hat


def _similarity_target(rows: np.ndarray, target: SimTarget) -> np.ndarray:
    distance = pairwise_jaccard(rows).values
    return 1.0 - distance if target == SimTarget.JACCARD_SIMILARITY else distance


def loss_and_gradients(
    params: ModelParams,
    a_batch: sp.spmatrix | np.ndarray,
    x_batch: sp.spmatrix | np.ndarray,
    weights: LossWeights,
    with_gradients: bool = True,
) -> tuple[float, dict[str, float], ModelParams | None]:
    """
    Joint loss of a batch and, optionally, its gradient.

    total = w_recon * (w_a * recon_A + w_x * recon_X)
          + w_sim * (w_a * sim_A + w_x * sim_X)
          + l2 * sum ||W||_F^2
    Args:
        params (ModelParams): Model parameters.
        a_batch: b x n adjacency rows, b >= 2.
        x_batch: b x d attribute rows.
        weights (LossWeights): Loss weights.
        with_gradients (bool): Whether to run the backward pass.
    Returns:
        tuple: (total, parts keyed by LOSS_PARTS, gradient or None).
    Raises:
        ConfigurationError: If the batch has fewer than 2 rows.
        DimensionMismatchError: If batch shapes do not match the model.
        NumericError: If the loss or gradient is non-finite.
    """
    a, x = _dense(a_batch), _dense(x_batch)
    _check_batch(params, a, x)
    if a.shape[0] < 2:
        raise ConfigurationError(f"pairwise losses need a batch of at least 2 nodes, got {a.shape[0]}")
    w = params.weights
    act = _activations(params, a, x)

    att_a = np.where(a > 0, weights.attention_beta, 1.0)
    att_x = np.where(x > 0, weights.attention_beta, 1.0)
    err_a = (act.a_hat - a) * att_a
    err_x = (act.x_hat - x) * att_x

    dist = pairwise_euclidean(act.h).values
    kernel = np.exp(-weights.lam * dist)
    res_a = kernel - _similarity_target(a, weights.sim_target)
    res_x = kernel - _similarity_target(x, weights.sim_target)

    parts = {
        "recon_A": float(np.sum(err_a ** 2)),
        "recon_X": float(np.sum(err_x ** 2)),
        "sim_A": float(np.sum(res_a ** 2)),
        "sim_X": float(np.sum(res_x ** 2)),
        "reg": float(weights.l2 * sum(np.sum(w[name] ** 2) for name in LAYERS)),
    }
    recon = weights.w_a * parts["recon_A"] + weights.w_x * parts["recon_X"]
    sim = weights.w_a * parts["sim_A"] + weights.w_x * parts["sim_X"]
    total = weights.w_recon * recon + weights.w_sim * sim + parts["reg"]
    if not np.isfinite(total):
        raise NumericError("non-finite joint loss", float(total))
    if not with_gradients:
        return total, parts, None

    grads = params.zeros_like()
    gw, gb = grads.weights, grads.biases

    # Reconstruction terms through the logistic decoders.
    g_logit_a = 2.0 * weights.w_recon * weights.w_a * err_a * att_a * act.a_hat * (1.0 - act.a_hat)
    g_logit_x = 2.0 * weights.w_recon * weights.w_x * err_x * att_x * act.x_hat * (1.0 - act.x_hat)
    gw["dec_adj"] = act.h.T @ g_logit_a
    gb["dec_adj"] = g_logit_a.sum(axis=0)
    gw["dec_attr"] = act.h.T @ g_logit_x
    gb["dec_attr"] = g_logit_x.sum(axis=0)
    g_h = g_logit_a @ w["dec_adj"].T + g_logit_x @ w["dec_attr"].T

    # Similarity terms through the pairwise distances; d||u||/du is taken as 0 at u = 0.
    g_kernel = 2.0 * weights.w_sim * (weights.w_a * res_a + weights.w_x * res_x)
    g_dist = -weights.lam * kernel * g_kernel
    q = np.divide(g_dist, dist, out=np.zeros_like(dist), where=dist > 0)
    q = q + q.T
    g_h += q.sum(axis=1)[:, None] * act.h - q @ act.h

    gw["enc_joint"] = act.joint.T @ g_h
    gb["enc_joint"] = g_h.sum(axis=0)
    g_joint = g_h @ w["enc_joint"].T
    hidden_adj = params.arch.hidden_adj
    g_z_adj = g_joint[:, :hidden_adj] * (act.z_adj > 0)
    g_z_attr = g_joint[:, hidden_adj:] * (act.z_attr > 0)
    gw["enc_adj"] = a.T @ g_z_adj
    gb["enc_adj"] = g_z_adj.sum(axis=0)
    gw["enc_attr"] = x.T @ g_z_attr
    gb["enc_attr"] = g_z_attr.sum(axis=0)

    for name in LAYERS:
        gw[name] = gw[name] + 2.0 * weights.l2 * w[name]
        entries = np.concatenate([gw[name].ravel(), gb[name].ravel()])
        bad = entries[~np.isfinite(entries)]
        if bad.size:
            raise NumericError(f"non-finite gradient in layer {name}", float(bad[0]))
    return total, parts, grads


def loss_joint(
    params: ModelParams,
    a_batch: sp.spmatrix | np.ndarray,
    x_batch: sp.spmatrix | np.ndarray,
    weights: LossWeights,
) -> tuple[float, dict[str, float]]:
    total, parts, _ = loss_and_gradients(params, a_batch, x_batch, weights, with_gradients=False)
    return total, parts


def gradients(
    params: ModelParams,
    a_batch: sp.spmatrix | np.ndarray,
    x_batch: sp.spmatrix | np.ndarray,
    weights: LossWeights,
) -> ModelParams:
    _, _, grads = loss_and_gradients(params, a_batch, x_batch, weights)
    return grads
