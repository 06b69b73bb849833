import logging
from collections.abc import Generator
from contextlib import contextmanager
from typing import Union


@contextmanager
def log_context(
    logger: Union[str, logging.Logger],
    level: int,
) -> Generator[logging.Logger, None, None]:
    """Temporarily run a logger, and the handlers attached to it, at ``level``.

    Handlers created by ``get_rich_logger`` carry their own threshold, so
    lowering the logger alone would not make DEBUG records visible.

    Args:
        logger: Logger name or logger instance
        level: Log level to use inside the block

    Yields:
        The logger instance

    Example:
        >>> with log_context("linpi", logging.DEBUG) as logger:
        ...     logger.debug("dumping closure classes")
    """
    logger_instance = logging.getLogger(logger) if isinstance(logger, str) else logger

    original_level = logger_instance.level
    original_handler_levels = [(h, h.level) for h in logger_instance.handlers]
    try:
        logger_instance.setLevel(level)
        for handler, _ in original_handler_levels:
            handler.setLevel(level)
        yield logger_instance
    finally:
        logger_instance.setLevel(original_level)
        for handler, handler_level in original_handler_levels:
            handler.setLevel(handler_level)
