from app.cli.parser import add_background, add_common
from app.core.config import Settings
from app.services import GraphService


def handle(settings: Settings) -> int:
    GraphService(settings).generate()
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("generate", help="write a random directed background graph")
    add_common(parser)
    add_background(parser)
    parser.set_defaults(handler=handle, sections=("background",))
