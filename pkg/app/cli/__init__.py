from app.cli import cluster, embed, eval, fingerprint, generate, ingest, inject, run, search, sweep, train
from app.cli.parser import CliParser, overrides_from

COMMANDS = (ingest, generate, inject, train, embed, cluster, fingerprint, run, search, eval, sweep)


def build_parser() -> CliParser:
    parser = CliParser(
        prog="jointdense",
        description="Dense sub-block detection in binary attributed graphs.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for command in COMMANDS:
        command.register(subparsers)
    return parser


__all__ = ["build_parser", "overrides_from", "CliParser", "COMMANDS"]
