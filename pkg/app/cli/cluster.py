from app.cli.parser import add_cluster, add_common, add_graph_input
from app.core.config import Settings
from app.services import ClusterService


def handle(settings: Settings) -> int:
    ClusterService(settings).cluster()
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("cluster", help="reduce H, run DBSCAN and rank clusters by density")
    add_common(parser)
    add_graph_input(parser)
    add_cluster(parser)
    parser.set_defaults(handler=handle)
