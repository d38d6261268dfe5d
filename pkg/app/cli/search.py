import logging

from app.cli.parser import add_background, add_common, add_graph_input, add_injection, add_search, add_train
from app.core.config import Settings
from app.services import SearchService

logger = logging.getLogger(__name__)


def handle(settings: Settings) -> int:
    result = SearchService(settings).search()
    logger.info("Best F1 %.4f at trial %d", result.best_f1, result.best_trial)
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("search", help="random hyperparameter search on synthetic injections")
    add_common(parser)
    add_graph_input(parser)
    add_background(parser)
    add_injection(parser)
    add_search(parser)
    add_train(parser)
    parser.set_defaults(handler=handle, sections=("injection", "search"))
