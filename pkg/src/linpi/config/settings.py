import configparser
import logging
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional

try:
    import tomllib
except ImportError:
    # For Python 3.10 and earlier
    import tomli as tomllib  # type: ignore

from linpi.config.defaults import (
    DEFAULT_DATE_FORMAT,
    DEFAULT_FUEL_REPL,
    DEFAULT_LEVEL,
    DEFAULT_LOG_FORMAT,
    DEFAULT_MAX_SEARCH_VARS,
    DEFAULT_MAX_STEPS,
    DEFAULT_OMEGA_FALLBACK,
    DEFAULT_RICH_TRACEBACKS,
    DEFAULT_SEED,
    DEFAULT_TRACEBACK_SUPPRESS,
    DEFAULT_UNBALANCED_NEW,
)
from linpi.core import get_rich_logger
from linpi.core.formatters import DateFormat, LogFormat

ENV_PREFIX = "LINPI_"
SECTION = "linpi"

_TRUE_STRINGS = ("true", "1", "yes", "on")
_INT_FIELDS = ("max_search_vars", "fuel_repl", "max_steps", "seed")
_BOOL_FIELDS = ("rich_tracebacks", "omega_fallback", "unbalanced_new")
_STR_FIELDS = ("level", "format", "date_format")


class ConfigError(Exception):
    """Configuration error"""

    pass


@dataclass
class Settings:
    level: str = DEFAULT_LEVEL
    format: str = DEFAULT_LOG_FORMAT
    date_format: str = DEFAULT_DATE_FORMAT
    rich_tracebacks: bool = DEFAULT_RICH_TRACEBACKS
    traceback_suppress: Optional[list[str]] = None
    max_search_vars: int = DEFAULT_MAX_SEARCH_VARS
    omega_fallback: bool = DEFAULT_OMEGA_FALLBACK
    unbalanced_new: bool = DEFAULT_UNBALANCED_NEW
    fuel_repl: int = DEFAULT_FUEL_REPL
    max_steps: int = DEFAULT_MAX_STEPS
    seed: int = DEFAULT_SEED

    def __post_init__(self) -> None:
        if self.traceback_suppress is None:
            self.traceback_suppress = DEFAULT_TRACEBACK_SUPPRESS.copy()

    def _validate_log_level(self, raise_on_invalid: bool = True) -> bool:
        """Validate log level

        Args:
            raise_on_invalid: If True, raise ConfigError on invalid level.
                            If False, return False on invalid level.

        Returns:
            True if valid, False if invalid (when raise_on_invalid=False)
        """
        valid_levels = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}
        if self.level.upper() not in valid_levels:
            if raise_on_invalid:
                raise ConfigError(
                    f"Invalid log level: {self.level}. "
                    f"Valid levels are: {', '.join(sorted(valid_levels))}"
                )
            return False
        return True

    def _validate_limits(self) -> None:
        """Reject search and interpreter bounds that make no sense"""
        if self.max_search_vars < 1:
            raise ConfigError(f"max_search_vars must be positive, got {self.max_search_vars}")
        for name in ("fuel_repl", "max_steps"):
            if getattr(self, name) < 0:
                raise ConfigError(f"{name} must not be negative, got {getattr(self, name)}")

    def validate(self) -> None:
        self._validate_log_level(raise_on_invalid=True)
        self._validate_limits()

    def get_log_level(self) -> int:
        """Convert string log level to logging module constant"""
        if not self._validate_log_level(raise_on_invalid=False):
            return logging.WARNING
        return logging.getLevelName(self.level.upper())

    def create_logger(self, name: str = "linpi") -> logging.Logger:
        """Create the package logger based on settings"""
        log_format = LogFormat.from_string(self.format)
        date_format = DateFormat.from_string(self.date_format)
        return get_rich_logger(
            name=name,
            level=self.get_log_level(),
            log_format=log_format,
            date_format=date_format,
            rich_tracebacks=self.rich_tracebacks,
            traceback_suppress=self.traceback_suppress,
        )


def load_settings(config_path: Optional[Path] = None) -> Settings:
    """Load settings from file and environment variables

    Priority order:
    1. Environment variables (``LINPI_*``)
    2. Configuration file (if specified), section ``[linpi]``
    3. Default values
    """
    settings = Settings()

    if config_path:
        if not config_path.exists():
            raise ConfigError(f"Configuration file not found: {config_path}")

        try:
            if config_path.suffix == ".toml":
                _load_from_toml(config_path, settings)
            else:
                _load_from_ini(config_path, settings)
        except ConfigError:
            raise
        except Exception as e:
            raise ConfigError(f"Failed to load configuration from {config_path}: {e}") from e

    try:
        _load_from_env(settings)
    except Exception as e:
        raise ConfigError(f"Failed to load configuration from environment: {e}") from e

    settings.validate()
    return settings


def _apply(settings: Settings, values: dict[str, Any]) -> None:
    for name in _STR_FIELDS:
        if name in values:
            setattr(settings, name, str(values[name]))
    for name in _INT_FIELDS:
        if name in values:
            setattr(settings, name, int(values[name]))
    for name in _BOOL_FIELDS:
        if name in values:
            value = values[name]
            if isinstance(value, str):
                value = value.lower() in _TRUE_STRINGS
            setattr(settings, name, bool(value))
    if "traceback_suppress" in values:
        suppress = values["traceback_suppress"]
        if isinstance(suppress, str):
            suppress = [s.strip() for s in suppress.split(",") if s.strip()]
        settings.traceback_suppress = list(suppress)


def _load_from_toml(config_path: Path, settings: Settings) -> None:
    """Load settings from TOML file"""
    try:
        with open(config_path, "rb") as f:
            data = tomllib.load(f)
    except tomllib.TOMLDecodeError as e:
        raise ConfigError(f"Invalid TOML format: {e}") from e

    if SECTION in data:
        _apply(settings, data[SECTION])
        settings._validate_log_level()


def _load_from_ini(config_path: Path, settings: Settings) -> None:
    """Load settings from INI file"""
    config = configparser.ConfigParser()
    try:
        config.read(config_path)
    except configparser.Error as e:
        raise ConfigError(f"Invalid INI format: {e}") from e

    if SECTION in config:
        _apply(settings, dict(config[SECTION]))
        settings._validate_log_level()


def _load_from_env(settings: Settings) -> None:
    """Load settings from environment variables"""
    values: dict[str, Any] = {}
    for name in (*_STR_FIELDS, *_INT_FIELDS, *_BOOL_FIELDS, "traceback_suppress"):
        raw = os.getenv(ENV_PREFIX + name.upper())
        if raw is not None and raw != "":
            values[name] = raw
    _apply(settings, values)
    settings._validate_log_level()
