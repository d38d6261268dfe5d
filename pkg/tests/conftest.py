from collections.abc import Callable
from pathlib import Path

import numpy as np
import pytest

from app.core.models import BinaryAttributedGraph


def graph_from_pairs(
    edges: list[tuple[str, str]],
    attributes: list[tuple[str, str]] = (),
    node_ids: list[str] | None = None,
) -> BinaryAttributedGraph:
    """Graph over string ids; nodes in first-appearance order unless given."""
    if node_ids is None:
        node_ids = list(dict.fromkeys([u for e in edges for u in e] + [a[0] for a in attributes]))
    names = list(dict.fromkeys(a[1] for a in attributes)) or ["#none"]
    index = {node: i for i, node in enumerate(node_ids)}
    column = {name: c for c, name in enumerate(names)}
    return BinaryAttributedGraph.from_indices(
        node_ids,
        names,
        [(index[u], index[v]) for u, v in edges],
        [(index[u], column[h]) for u, h in attributes],
    )


def random_graph(rng: np.random.Generator, n: int, d: int, p_edge: float, p_attr: float) -> BinaryAttributedGraph:
    a = rng.random((n, n)) < p_edge
    np.fill_diagonal(a, False)
    x = rng.random((n, d)) < p_attr
    return BinaryAttributedGraph.from_indices(
        [f"n{i}" for i in range(n)], [f"#a{j}" for j in range(d)], np.argwhere(a), np.argwhere(x)
    )


def clique_graph(sizes: list[int], noise_nodes: int = 0, attrs_per_clique: int = 3) -> BinaryAttributedGraph:
    """Disjoint directed cliques with disjoint attribute sets, plus isolated noise nodes."""
    edges, activations = [], []
    start = 0
    for c, size in enumerate(sizes):
        members = range(start, start + size)
        edges += [(i, j) for i in members for j in members if i != j]
        activations += [(i, c * attrs_per_clique + a) for i in members for a in range(attrs_per_clique)]
        start += size
    n = start + noise_nodes
    d = len(sizes) * attrs_per_clique
    return BinaryAttributedGraph.from_indices(
        [f"n{i}" for i in range(n)], [f"#a{j}" for j in range(d)], edges, activations
    )


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(12345)


@pytest.fixture
def write_tsv(tmp_path: Path) -> Callable[[str, str], Path]:
    def _write(name: str, content: str) -> Path:
        path = tmp_path / name
        path.write_text(content, encoding="utf-8")
        return path
    return _write


@pytest.fixture
def tiny_inputs(write_tsv) -> tuple[Path, Path]:
    """Edge and attribute TSVs of two 6-cliques joined by one edge, each with its own hashtags."""
    lines = ["# follower edges"]
    for base in (0, 6):
        lines += [f"u{i}\tu{j}" for i in range(base, base + 6) for j in range(base, base + 6) if i != j]
    lines.append("u0\tu6")
    lines += [f"u{12 + i}\tu{(i + 1) % 12}" for i in range(8)]
    attrs = [f"u{i}\t#red" for i in range(6)] + [f"u{i}\t#blue" for i in range(6, 12)]
    attrs += [f"u{i}\t#misc{i % 3}" for i in range(12, 20)]
    return write_tsv("edges.tsv", "\n".join(lines) + "\n"), write_tsv("attrs.tsv", "\n".join(attrs) + "\n")
