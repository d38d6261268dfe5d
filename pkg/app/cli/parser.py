import argparse
from pathlib import Path
from typing import Any, NoReturn

from pydantic import BaseModel

from app.core.exceptions import ConfigurationError
from app.core.schemas import (
    BackgroundSpec,
    ClusterConfig,
    FingerprintConfig,
    InjectionSpec,
    LossWeights,
    SearchSpace,
    SweepConfig,
    TrainConfig,
)

# dest of every settings flag is "<section>__<field>"; absent flags stay out of the namespace
SEP = "__"


class CliParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors become configuration errors (exit code 1)."""

    def error(self, message: str) -> NoReturn:
        raise ConfigurationError(f"{self.prog}: {message}")


def _default(model: type[BaseModel], field: str) -> Any:
    value = model.model_fields[field].default
    return getattr(value, "value", value)


def setting(
    parser: argparse.ArgumentParser,
    flag: str,
    section: str,
    field: str,
    model: type[BaseModel] | None = None,
    **kwargs: Any,
) -> None:
    """Add a flag that overrides `section.field`; help shows the model's default."""
    help_text = kwargs.pop("help", None)
    if help_text is None and model is not None:
        help_text = model.model_fields[field].description or field.replace("_", " ")
    if model is not None:
        help_text = f"{help_text} (default: {_default(model, field)})"
    parser.add_argument(flag, dest=f"{section}{SEP}{field}", default=argparse.SUPPRESS, help=help_text, **kwargs)


def overrides_from(args: argparse.Namespace) -> dict[str, Any]:
    """Nested settings overrides from the flags that were given."""
    overrides: dict[str, Any] = {}
    for dest, value in vars(args).items():
        if SEP not in dest:
            continue
        node = overrides
        *parents, leaf = dest.split(SEP)
        for key in parents:
            node = node.setdefault(key, {})
        node[leaf] = value
    for section in getattr(args, "sections", ()):
        overrides.setdefault(section, {})
    return overrides


def add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", type=Path, default=None, help="JSON config file; flags override its values")
    setting(parser, "--output-dir", "paths", "output_dir", type=Path,
            help="run directory (default: <output-root>/latest)")
    setting(parser, "--output-root", "paths", "output_root", type=Path,
            help="root of run directories, also APP_CONFIG__PATHS__OUTPUT_ROOT (default: runs)")
    setting(parser, "--log-level", "logging", "level", choices=["DEBUG", "INFO", "WARNING", "ERROR"],
            help="log level (default: INFO)")


def add_graph_input(parser: argparse.ArgumentParser) -> None:
    setting(parser, "--graph-file", "paths", "graph_file", type=Path,
            help="graph snapshot to read (default: <output-dir>/graph.json)")


def add_loss(parser: argparse.ArgumentParser) -> None:
    setting(parser, "--w-a", "loss", "w_a", LossWeights, type=float)
    setting(parser, "--w-x", "loss", "w_x", LossWeights, type=float)
    setting(parser, "--w-recon", "loss", "w_recon", LossWeights, type=float)
    setting(parser, "--w-sim", "loss", "w_sim", LossWeights, type=float)
    setting(parser, "--lam", "loss", "lam", LossWeights, type=float)
    setting(parser, "--l2", "loss", "l2", LossWeights, type=float)
    setting(parser, "--attention-beta", "loss", "attention_beta", LossWeights, type=float)
    setting(parser, "--sim-target", "loss", "sim_target", LossWeights,
            choices=["jaccard_similarity", "jaccard_distance"])


def add_train(parser: argparse.ArgumentParser) -> None:
    setting(parser, "--epochs", "train", "epochs", TrainConfig, type=int)
    setting(parser, "--batch-size", "train", "batch_size", TrainConfig, type=int)
    setting(parser, "--learning-rate", "train", "learning_rate", TrainConfig, type=float)
    setting(parser, "--seed", "train", "seed", TrainConfig, type=int)
    setting(parser, "--sampler", "train", "sampler", TrainConfig, choices=["uniform", "similarity_weighted"])
    setting(parser, "--latent-dim", "train", "latent_dim", TrainConfig, type=int)
    setting(parser, "--hidden-adj", "train", "hidden_adj", TrainConfig, type=int)
    setting(parser, "--hidden-attr", "train", "hidden_attr", TrainConfig, type=int)


def add_cluster(parser: argparse.ArgumentParser) -> None:
    setting(parser, "--out-dims", "cluster", "out_dims", ClusterConfig, type=int)
    setting(parser, "--no-rescale", "cluster", "rescale", ClusterConfig, action="store_false")
    setting(parser, "--eps", "cluster", "eps", ClusterConfig, type=float)
    setting(parser, "--min-pts", "cluster", "min_pts", ClusterConfig, type=int)
    add_ranking(parser)


def add_ranking(parser: argparse.ArgumentParser) -> None:
    setting(parser, "--t", "cluster", "t", ClusterConfig, type=float)
    setting(parser, "--k", "cluster", "k", ClusterConfig, type=int)


def add_fingerprint(parser: argparse.ArgumentParser) -> None:
    setting(parser, "--m", "fingerprint", "m", FingerprintConfig, type=int)
    setting(parser, "--bins", "fingerprint", "bins", FingerprintConfig, type=int)
    setting(parser, "--sample-seed", "fingerprint", "sample_seed", FingerprintConfig, type=int)


def add_background(parser: argparse.ArgumentParser) -> None:
    setting(parser, "--nodes", "background", "n", BackgroundSpec, type=int)
    setting(parser, "--attributes", "background", "d", BackgroundSpec, type=int)
    setting(parser, "--edge-p", "background", "edge_p", BackgroundSpec, type=float)
    setting(parser, "--attr-p", "background", "attr_p", BackgroundSpec, type=float)
    setting(parser, "--background-seed", "background", "seed", BackgroundSpec, type=int)


def add_injection(parser: argparse.ArgumentParser) -> None:
    setting(parser, "--num-blocks", "injection", "num_blocks", InjectionSpec, type=int)
    setting(parser, "--block-size", "injection", "block_size", InjectionSpec, type=int)
    setting(parser, "--adj-density", "injection", "adj_density", InjectionSpec, type=float)
    setting(parser, "--attr-density", "injection", "attr_density", InjectionSpec, type=float)
    setting(parser, "--smoothing-k", "injection", "smoothing_k", InjectionSpec, type=float)
    setting(parser, "--sharpen-lambda", "injection", "sharpen_lambda", InjectionSpec, type=float)
    setting(parser, "--hashtags-per-block", "injection", "hashtags_per_block", InjectionSpec, type=int)
    setting(parser, "--injection-seed", "injection", "seed", InjectionSpec, type=int)


def add_search(parser: argparse.ArgumentParser) -> None:
    setting(parser, "--trials", "search", "trials", SearchSpace, type=int)
    setting(parser, "--workers", "search", "workers", SearchSpace, type=int)


def add_sweep(parser: argparse.ArgumentParser) -> None:
    setting(parser, "--densities", "sweep", "densities", type=float, nargs="+",
            help="injected densities (default: 0.10 0.15 ... 0.50)")
    setting(parser, "--sweep-seeds", "sweep", "seeds", type=int, nargs="+",
            help=f"injection seeds per density (default: {' '.join(map(str, SweepConfig().seeds))})")
