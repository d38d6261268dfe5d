import logging
import sys

from pydantic import ValidationError

from app.cli import build_parser, overrides_from
from app.core import load_settings
from app.core.exceptions import ConfigurationError, DenseBlockError
from app.core.logging import configure_logging

logger = logging.getLogger("app")


def main(argv: list[str] | None = None) -> int:
    """
    Parse the command line, resolve settings and run one subcommand.
    Returns the process exit code: 0 success, 1 usage or configuration
    error, 2 data error, 3 numeric failure.
    """
    try:
        args = build_parser().parse_args(argv)
        settings = load_settings(args.config, overrides_from(args))
        configure_logging(settings.logging)
        return args.handler(settings)
    except DenseBlockError as exc:
        where = f"stage {exc.stage} failed: " if exc.stage else ""
        logger.error("%s%s", where, exc.detail)
        return exc.exit_code
    except ValidationError as exc:
        logger.error("Invalid parameters: %s", exc)
        return ConfigurationError.exit_code


if __name__ == '__main__':
    sys.exit(main())
