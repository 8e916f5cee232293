"""Tests for setup_logging."""

import json
import logging
import sys
from io import StringIO

import pytest

from tits.alternative.observability import StderrLoggerProvider, StructuredFormatter, setup_logging


class StreamProvider(StderrLoggerProvider):
    def __init__(self):
        self.stream = StringIO()

    def setup_handler(self, level=logging.INFO):
        handler = logging.StreamHandler(self.stream)
        handler.setLevel(level)
        return handler


def _package_logger() -> logging.Logger:
    return logging.getLogger("tits.alternative")


class TestSetupLogging:
    def teardown_method(self):
        package_logger = _package_logger()
        for h in package_logger.handlers[:]:
            h.close()
            package_logger.removeHandler(h)
        package_logger.setLevel(logging.NOTSET)
        package_logger.propagate = True

    def test_default_configuration(self):
        logger = setup_logging()
        assert logger is _package_logger()
        assert logger.level == logging.WARNING
        assert len(logger.handlers) == 1
        assert logger.propagate is False

    def test_default_handler_writes_to_stderr(self):
        (handler,) = setup_logging().handlers
        assert isinstance(handler, logging.StreamHandler)
        assert handler.stream is sys.stderr

    def test_text_format(self):
        provider = StreamProvider()
        setup_logging("INFO", provider=provider)
        logging.getLogger("tits.alternative.checks").info("Checked")
        assert "INFO tits.alternative.checks: Checked" in provider.stream.getvalue()

    def test_structured(self):
        provider = StreamProvider()
        setup_logging("INFO", structured=True, provider=provider)
        logging.getLogger("tits.alternative.folding").info("Unfolded", extra={"vertex": "v"})

        log_data = json.loads(provider.stream.getvalue().strip().splitlines()[-1])
        assert log_data["message"] == "Unfolded"
        assert log_data["vertex"] == "v"

    def test_custom_formatter_wins(self):
        formatter = logging.Formatter("%(levelname)s - %(message)s")
        provider = StreamProvider()
        setup_logging("INFO", structured=True, formatter=formatter, provider=provider)
        logging.getLogger("tits.alternative").info("Plain")
        assert provider.stream.getvalue().strip() == "INFO - Plain"

    def test_debug_level_case_insensitive(self):
        provider = StreamProvider()
        setup_logging("debug", structured=True, provider=provider)
        assert _package_logger().level == logging.DEBUG
        first = json.loads(provider.stream.getvalue().splitlines()[0])
        assert first["message"] == "Logging configured"
        assert first["log_level"] == "DEBUG"

    def test_repeated_setup_replaces_the_handler(self):
        setup_logging()
        setup_logging("ERROR")
        assert len(_package_logger().handlers) == 1
        assert _package_logger().level == logging.ERROR

    def test_structured_handler_formatter(self):
        (handler,) = setup_logging(structured=True).handlers
        assert isinstance(handler.formatter, StructuredFormatter)

    def test_does_not_touch_root_handlers(self):
        root_handler = logging.StreamHandler()
        logging.root.addHandler(root_handler)
        try:
            setup_logging("INFO")
            assert root_handler in logging.root.handlers
        finally:
            logging.root.removeHandler(root_handler)

    def test_invalid_level(self):
        with pytest.raises(AttributeError):
            setup_logging("LOUD")
