from pathlib import Path

from app.cli.parser import add_background, add_common, add_graph_input, add_injection, add_sweep, setting
from app.core.config import Settings
from app.services import SearchService


def handle(settings: Settings) -> int:
    SearchService(settings).sweep()
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("sweep", help="pipeline vs. baseline F1 across injected densities")
    add_common(parser)
    add_graph_input(parser)
    add_background(parser)
    add_injection(parser)
    add_sweep(parser)
    setting(parser, "--best-config", "paths", "best_config_file", type=Path,
            help="best_config.json of a search to evaluate (default: configured sections)")
    parser.set_defaults(handler=handle, sections=("injection",))
