import logging

from app.core.config import LoggingConfig


def configure_logging(config: LoggingConfig) -> None:
    """Install a single stream handler on the root logger."""
    logging.basicConfig(level=config.level.upper(), format=config.format, force=True)
