import logging

from app.cli.parser import add_common, add_graph_input, add_injection
from app.core.config import Settings
from app.services import GraphService

logger = logging.getLogger(__name__)


def handle(settings: Settings) -> int:
    _, truth = GraphService(settings).inject()
    logger.info(
        "Planted %d blocks (%d anomalous nodes)", len(truth.block_memberships), int(truth.anomaly_labels.sum())
    )
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("inject", help="plant dense sub-blocks into a clean graph")
    add_common(parser)
    add_graph_input(parser)
    add_injection(parser)
    parser.set_defaults(handler=handle, sections=("injection",))
