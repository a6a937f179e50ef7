import sys

from loguru import logger

from selfdual.config import settings


def configure_logger(level: str | None = None, fmt: str | None = None) -> None:
    """Route loguru output to stderr so stdout stays free for graph6/DOT/json artifacts."""
    logger.remove()
    logger.add(
        sys.stderr,
        format=fmt or settings.SELFDUAL_LOG_FORMAT,
        level=(level or settings.SELFDUAL_LOG_LEVEL).upper(),
    )
