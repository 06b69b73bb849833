from enum import Enum


class _NamedFormat(str, Enum):
    @classmethod
    def from_string(cls, value: str) -> str:
        """Look a member up by name (case insensitive); unknown strings are custom formats"""
        try:
            return cls[value.upper()]
        except KeyError:
            return value


class LogFormat(_NamedFormat):
    """Message formats for the pipeline logger"""

    DEFAULT = "%(message)s"
    PHASE = "[%(name)s] %(message)s"
    SIMPLE = "%(levelname)s: %(message)s"
    DETAILED = "%(name)s - %(levelname)s - [%(filename)s:%(lineno)d] - %(message)s"
    NOTHING = ""


class DateFormat(_NamedFormat):
    """Timestamp formats for the pipeline logger"""

    DEFAULT = "%H:%M:%S"
    ISO8601 = "%Y-%m-%dT%H:%M:%S"
    NOTHING = ""
