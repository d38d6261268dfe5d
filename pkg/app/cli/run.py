from pathlib import Path

from app.cli.parser import add_cluster, add_common, add_fingerprint, add_graph_input, add_loss, add_train, setting
from app.core.config import Settings
from app.services import PipelineService


def handle(settings: Settings) -> int:
    PipelineService(settings).run()
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("run", help="full pipeline: ingest, train, cluster, fingerprint (and eval)")
    add_common(parser)
    setting(parser, "--edge-file", "paths", "edge_file", type=Path, help="TSV of src<TAB>dst")
    setting(parser, "--attribute-file", "paths", "attribute_file", type=Path,
            help="TSV of node_id<TAB>attribute_name")
    add_graph_input(parser)
    setting(parser, "--ground-truth", "paths", "ground_truth_file", type=Path,
            help="ground truth CSV; when present the run is also evaluated (default: <output-dir>/ground_truth.csv)")
    add_loss(parser)
    add_train(parser)
    add_cluster(parser)
    add_fingerprint(parser)
    parser.set_defaults(handler=handle)
