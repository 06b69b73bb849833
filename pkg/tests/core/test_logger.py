import logging
from unittest.mock import Mock, patch

from linpi.core.logger import get_rich_logger


class TestGetRichLogger:
    def test_creates_logger_with_name(self) -> None:
        logger = get_rich_logger("test_logger")
        assert logger.name == "test_logger"

    def test_creates_logger_with_default_name(self) -> None:
        logger = get_rich_logger()
        assert logger.name == "linpi"

    def test_sets_correct_log_level(self) -> None:
        logger = get_rich_logger("level_test", level=logging.DEBUG)
        assert logger.level == logging.DEBUG

    def test_default_log_level_is_warning(self) -> None:
        logger = get_rich_logger("default_level_test")
        assert logger.level == logging.WARNING

    def test_logger_has_rich_handler(self) -> None:
        logger = get_rich_logger("handler_test")
        assert len(logger.handlers) == 1
        assert logger.handlers[0].__class__.__name__ == "RichHandler"

    def test_clears_existing_handlers(self) -> None:
        logger = get_rich_logger("duplicate_test")
        initial_handler_count = len(logger.handlers)

        logger = get_rich_logger("duplicate_test")
        assert len(logger.handlers) == initial_handler_count

    def test_module_loggers_propagate_to_package_logger(self) -> None:
        package = get_rich_logger("linpi")
        assert logging.getLogger("linpi.solver.closure").parent is package

    @patch("linpi.core.logger.RichHandler")
    def test_rich_handler_configuration(self, mock_rich_handler_class: Mock) -> None:
        mock_handler = Mock()
        mock_rich_handler_class.return_value = mock_handler
        console = Mock()

        get_rich_logger(
            name="config_test",
            level=logging.INFO,
            rich_tracebacks=False,
            traceback_suppress=["lark"],
            console=console,
        )

        mock_rich_handler_class.assert_called_once_with(
            console=console,
            show_time=True,
            show_level=True,
            show_path=False,
            rich_tracebacks=False,
            tracebacks_suppress=["lark"],
        )
        mock_handler.setLevel.assert_called_once_with(logging.INFO)

    def test_no_timestamp_without_date_format(self) -> None:
        logger = get_rich_logger("no_time_test", date_format="")
        assert logger.handlers[0]._log_render.show_time is False  # type: ignore[attr-defined]

    def test_formatter_is_set_correctly(self) -> None:
        logger = get_rich_logger(
            "formatter_test",
            log_format="%(levelname)s: %(message)s",
            date_format="%Y-%m-%d",
        )
        formatter = logger.handlers[0].formatter

        assert formatter is not None
        assert formatter._fmt == "%(levelname)s: %(message)s"
        assert formatter.datefmt == "%Y-%m-%d"
