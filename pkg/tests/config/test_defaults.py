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


class TestDefaults:
    def test_default_level(self) -> None:
        assert DEFAULT_LEVEL == "WARNING"

    def test_default_log_format(self) -> None:
        assert DEFAULT_LOG_FORMAT == "DEFAULT"

    def test_default_date_format(self) -> None:
        assert DEFAULT_DATE_FORMAT == "DEFAULT"

    def test_default_rich_tracebacks(self) -> None:
        assert DEFAULT_RICH_TRACEBACKS is True

    def test_default_traceback_suppress(self) -> None:
        assert DEFAULT_TRACEBACK_SUPPRESS == ["lark", "networkx"]

    def test_solver_defaults(self) -> None:
        assert DEFAULT_MAX_SEARCH_VARS == 24
        assert DEFAULT_OMEGA_FALLBACK is False
        assert DEFAULT_UNBALANCED_NEW is False

    def test_interpreter_defaults(self) -> None:
        assert DEFAULT_FUEL_REPL == 1
        assert DEFAULT_MAX_STEPS == 100
        assert DEFAULT_SEED == 0
