from linpi.utils.context import log_context
from linpi.utils.decorators import log_errors, log_execution_time

__all__ = ["log_context", "log_errors", "log_execution_time"]
