import functools
import logging
import time
from typing import Any, Callable, Optional, TypeVar, cast

F = TypeVar("F", bound=Callable[..., Any])


def log_execution_time(
    logger: logging.Logger,
    level: int = logging.DEBUG,
    label: Optional[str] = None,
) -> Callable[[F], F]:
    """Decorator that logs how long a pipeline phase took.

    Args:
        logger: Logger to record the timing on
        level: Log level (defaults to DEBUG)
        label: Phase name shown in the message (defaults to the function name)

    Returns:
        Decorated function
    """

    def decorator(func: F) -> F:
        phase = label or func.__name__

        @functools.wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            start = time.perf_counter()
            try:
                return func(*args, **kwargs)
            finally:
                if logger.isEnabledFor(level):
                    elapsed = time.perf_counter() - start
                    logger.log(level, "%s took %.4f seconds", phase, elapsed)

        return cast(F, wrapper)

    return decorator


def log_errors(
    logger: logging.Logger,
    level: int = logging.ERROR,
    reraise: bool = True,
    ignore: tuple[type[BaseException], ...] = (),
) -> Callable[[F], F]:
    """Decorator that logs unexpected exceptions raised within a function.

    Args:
        logger: Logger to record the error on
        level: Log level (defaults to ERROR)
        reraise: Whether to re-raise the exception (defaults to True)
        ignore: Exception types that are part of the function's contract;
            they propagate without being logged

    Returns:
        Decorated function
    """

    def decorator(func: F) -> F:
        @functools.wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            try:
                return func(*args, **kwargs)
            except ignore:
                raise
            except Exception as e:
                logger.log(
                    level,
                    "Error in %s: %s: %s",
                    getattr(func, "__name__", "unknown"),
                    type(e).__name__,
                    e,
                    exc_info=True,
                )
                if reraise:
                    raise
                return None

        return cast(F, wrapper)

    return decorator
