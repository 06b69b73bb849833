import logging
from typing import Optional, Union

from rich.console import Console
from rich.logging import RichHandler

from linpi.core.formatters import DateFormat, LogFormat


def get_rich_logger(
    name: str = "linpi",
    *,
    level: int = logging.WARNING,
    rich_tracebacks: bool = True,
    traceback_suppress: Optional[list[str]] = None,
    log_format: Union[str, LogFormat] = LogFormat.DEFAULT,
    date_format: Union[str, DateFormat] = DateFormat.DEFAULT,
    console: Optional[Console] = None,
) -> logging.Logger:
    """Attach a Rich console handler to a logger.

    Library modules only call ``logging.getLogger(__name__)``; this function
    is what the command line (or an embedding application) uses to make
    those records visible. Diagnostics go to standard error so that the
    reports printed on standard output stay machine readable.

    Args:
        name: Logger to configure. Defaults to the package logger, which
            every ``linpi.*`` module logger propagates to.
        level: Threshold for both the logger and its handler.
        rich_tracebacks: Render exception tracebacks with Rich.
        traceback_suppress: Modules whose frames are collapsed in tracebacks.
        log_format: A LogFormat member or a custom ``logging`` format string.
        date_format: A DateFormat member or a custom ``strftime`` string.
        console: Console to write to. Defaults to a standard error console.

    Returns:
        logging.Logger: The configured logger.

    Example:
        >>> logger = get_rich_logger(level=logging.DEBUG, log_format=LogFormat.PHASE)
        >>> logger.debug("closure computed")
    """
    logger = logging.getLogger(name)
    logger.setLevel(level)

    # Clear existing handlers to prevent duplication
    if logger.hasHandlers():
        logger.handlers.clear()

    handler = RichHandler(
        console=console or Console(stderr=True),
        show_time=bool(date_format),
        show_level=True,
        show_path=False,
        rich_tracebacks=rich_tracebacks,
        tracebacks_suppress=traceback_suppress or [],
    )
    handler.setLevel(level)
    handler.setFormatter(logging.Formatter(log_format, datefmt=date_format))

    logger.addHandler(handler)
    return logger
