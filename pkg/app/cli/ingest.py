import logging
from pathlib import Path

from app.cli.parser import add_common, setting
from app.core.config import Settings
from app.services import GraphService

logger = logging.getLogger(__name__)


def handle(settings: Settings) -> int:
    graph = GraphService(settings).ingest()
    logger.info("Snapshot of %d nodes and %d attributes written to %s", graph.n, graph.d, settings.paths.output_dir)
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("ingest", help="load edge and attribute TSVs into a graph snapshot")
    add_common(parser)
    setting(parser, "--edge-file", "paths", "edge_file", type=Path, required=True, help="TSV of src<TAB>dst")
    setting(parser, "--attribute-file", "paths", "attribute_file", type=Path, required=True,
            help="TSV of node_id<TAB>attribute_name")
    parser.set_defaults(handler=handle)
