from app.cli.parser import add_common, add_graph_input, add_loss, add_train
from app.core.config import Settings
from app.services import ModelService


def handle(settings: Settings) -> int:
    ModelService(settings).train()
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("train", help="train the joint autoencoder and export H")
    add_common(parser)
    add_graph_input(parser)
    add_loss(parser)
    add_train(parser)
    parser.set_defaults(handler=handle)
