from linpi.core.formatters import DateFormat, LogFormat
from linpi.core.logger import get_rich_logger

__all__ = ["DateFormat", "LogFormat", "get_rich_logger"]
