"""Command-line fixtures."""

import json
import logging
from collections.abc import Callable, Iterator
from typing import Any

import pytest
from click.testing import CliRunner, Result

from tits.alternative.cli.main import cli
from tits.alternative.cli.output import DEFAULT_DIGITS, set_float_digits, set_output_mode


@pytest.fixture(autouse=True)
def reset_cli_state() -> Iterator[None]:
    """The root group installs a handler and records the output mode per process."""
    yield
    set_output_mode(None)
    set_float_digits(DEFAULT_DIGITS)
    package_logger = logging.getLogger("tits.alternative")
    for handler in package_logger.handlers[:]:
        handler.close()
        package_logger.removeHandler(handler)
    package_logger.setLevel(logging.NOTSET)
    package_logger.propagate = True


@pytest.fixture
def run_json() -> Callable[..., tuple[Result, Any]]:
    """Invoke ``tits-alt --output json ARGS`` and parse stdout."""

    def invoke(*args: str) -> tuple[Result, Any]:
        result = CliRunner().invoke(cli, ["--output", "json", *map(str, args)])
        return result, json.loads(result.stdout)

    return invoke
