from pathlib import Path

from app.cli.parser import add_common, add_graph_input, setting
from app.core.config import Settings
from app.services import ModelService


def handle(settings: Settings) -> int:
    ModelService(settings).embed_checkpoint()
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("embed", help="recompute H from a saved checkpoint without training")
    add_common(parser)
    add_graph_input(parser)
    setting(parser, "--checkpoint", "paths", "checkpoint_file", type=Path,
            help="checkpoint to load (default: <output-dir>/checkpoint.json)")
    parser.set_defaults(handler=handle)
