import logging
from collections.abc import Iterator
from pathlib import Path

from app.core.exceptions import DataError, GraphFormatError
from app.core.models import BinaryAttributedGraph
from app.core.schemas import GraphSnapshot
from app.repositories.base_repo import BaseRepository

logger = logging.getLogger(__name__)


def _tsv_pairs(path: Path) -> Iterator[tuple[int, str, str]]:
    """Yield (line number, first, second) of a two-column TSV; '#' lines and blanks are skipped."""
    try:
        fh = open(path, encoding="utf-8")
    except OSError as exc:
        raise DataError(f"Cannot read {path}: {exc.strerror or exc}") from exc
    with fh:
        try:
            for lineno, line in enumerate(fh, start=1):
                line = line.rstrip("\r\n")
                if not line.strip() or line.lstrip().startswith("#"):
                    continue
                fields = line.split("\t")
                if len(fields) != 2:
                    raise GraphFormatError(str(path), lineno, f"expected 2 tab-separated fields, got {len(fields)}")
                first, second = fields[0].strip(), fields[1].strip()
                if not first or not second:
                    raise GraphFormatError(str(path), lineno, "empty field")
                yield lineno, first, second
        except UnicodeDecodeError as exc:
            raise GraphFormatError(str(path), None, f"not valid UTF-8 ({exc.reason})") from exc


class GraphRepository(BaseRepository[GraphSnapshot]):
    """Reads raw TSV edge/attribute files and reads/writes canonical graph snapshots."""

    def __init__(self):
        super().__init__(GraphSnapshot)

    def load_tsv(self, edge_file: Path, attribute_file: Path) -> BinaryAttributedGraph:
        """
        Build a graph from an edge TSV (`src<TAB>dst`) and an attribute TSV (`node<TAB>attribute`).

        Nodes are indexed in order of first appearance, edge file first;
        attribute columns in order of first appearance. Duplicate lines
        collapse, self-loops are dropped and counted.
        Raises:
            DataError: If a file cannot be read or holds no entries.
            GraphFormatError: On a malformed line (reported with its number).
        """
        node_index: dict[str, int] = {}
        attribute_index: dict[str, int] = {}
        edges: list[tuple[int, int]] = []
        activations: list[tuple[int, int]] = []
        self_loops = 0

        for _, src, dst in self._non_empty(edge_file):
            i = node_index.setdefault(src, len(node_index))
            j = node_index.setdefault(dst, len(node_index))
            if i == j:
                self_loops += 1
                continue
            edges.append((i, j))
        for _, node, attribute in self._non_empty(attribute_file):
            i = node_index.setdefault(node, len(node_index))
            activations.append((i, attribute_index.setdefault(attribute, len(attribute_index))))

        if self_loops:
            logger.warning("Dropped %d self-loop(s) from %s", self_loops, edge_file)
        graph = BinaryAttributedGraph.from_indices(list(node_index), list(attribute_index), edges, activations)
        logger.info("Loaded graph: %d nodes, %d edges, %d attributes", graph.n, graph.num_edges, graph.d)
        return graph

    @staticmethod
    def _non_empty(path: Path) -> Iterator[tuple[int, str, str]]:
        empty = True
        for entry in _tsv_pairs(Path(path)):
            empty = False
            yield entry
        if empty:
            raise DataError(f"{path} contains no entries")

    def save_graph(self, path: Path, g: BinaryAttributedGraph) -> Path:
        ids, names = g.node_ids, g.attribute_names
        snapshot = GraphSnapshot(
            node_ids=list(ids),
            attribute_names=list(names),
            edges=[(ids[i], ids[j]) for i, j in g.edge_index_pairs()],
            attributes=[(ids[i], names[c]) for i, c in g.activation_index_pairs()],
        )
        return self.save(path, snapshot)

    def load_graph(self, path: Path) -> BinaryAttributedGraph:
        """Load a snapshot; node and column order are exactly as stored."""
        snapshot = self.load(path)
        node_index = {node_id: i for i, node_id in enumerate(snapshot.node_ids)}
        attribute_index = {name: c for c, name in enumerate(snapshot.attribute_names)}
        try:
            edges = [(node_index[src], node_index[dst]) for src, dst in snapshot.edges]
            activations = [(node_index[node], attribute_index[name]) for node, name in snapshot.attributes]
        except KeyError as exc:
            raise GraphFormatError(str(path), None, f"unknown node or attribute {exc.args[0]!r}") from exc
        return BinaryAttributedGraph.from_indices(snapshot.node_ids, snapshot.attribute_names, edges, activations)
