from app.cli.parser import add_common, add_fingerprint, add_graph_input, add_ranking
from app.core.config import Settings
from app.services import ReportService


def handle(settings: Settings) -> int:
    ReportService(settings).fingerprint()
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("fingerprint", help="write the fingerprint report of the top-k clusters")
    add_common(parser)
    add_graph_input(parser)
    add_ranking(parser)
    add_fingerprint(parser)
    parser.set_defaults(handler=handle)
