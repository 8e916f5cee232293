"""Error types for the `tits-alt` CLI.

Every failure the CLI raises carries a stable machine-readable ``code``, a
human-readable message and, where one exists, a ``hint``. Exit codes are
stable: 0 success, 1 the analysis ran and the subject failed, 2 the input or
the invocation was rejected.
"""

from __future__ import annotations

import sys
from collections.abc import Iterator
from contextlib import contextmanager
from typing import Any, Optional, Sequence

import click

from tits.alternative.exceptions import AnalysisError, ComplexInputError, ConfigurationError, TitsError

EXIT_OK = 0
"""Command succeeded and every check passed."""

EXIT_ANALYSIS = 1
"""The analysis ran and the subject failed a check or a precondition."""

EXIT_INPUT = 2
"""Bad document, bad reference into it, bad settings, or bad invocation. Click's value for `UsageError`."""


class CliError(click.ClickException):
    """A CLI failure that renders identically in text and JSON output.

    Subclasses set ``code`` and ``exit_code``.
    """

    code = "error"
    exit_code = EXIT_ANALYSIS

    def __init__(
        self,
        message: str,
        *,
        detail: Optional[str] = None,
        hint: Optional[Sequence[str]] = None,
        data: Optional[dict[str, Any]] = None,
    ) -> None:
        """Build an error carrying its own remediation."""
        super().__init__(message)
        self.detail = detail
        self.hint = list(hint or [])
        self.data = data or {}

    @classmethod
    def from_exception(cls, exc: TitsError) -> CliError:
        """Wrap a toolkit exception, keeping its structured data and fix suggestion."""
        kind = type(exc).__name__
        return cls(
            exc.message,
            hint=[exc.fix_suggestion] if exc.fix_suggestion else None,
            data={"exception": kind, **exc.data},
        )

    def as_dict(self) -> dict[str, Any]:
        """Machine-readable form, embedded in the JSON error envelope."""
        payload: dict[str, Any] = {"code": self.code, "message": self.format_message()}
        if self.detail:
            payload["detail"] = self.detail
        if self.hint:
            payload["hint"] = self.hint
        if self.data:
            payload["data"] = self.data
        return payload

    def show(self, file: Any = None) -> None:
        """Render the failure, to stdout in JSON mode and stderr otherwise."""
        # output imports errors
        from tits.alternative.cli.output import OutputMode, current_output_mode, render_error

        mode = current_output_mode()
        stream = file
        if stream is None:
            stream = sys.stdout if mode is OutputMode.JSON else sys.stderr
        click.echo(render_error(self, mode), file=stream)


class InputError(CliError):
    """The document, a reference into it, or the settings were rejected."""

    code = "invalid_input"
    exit_code = EXIT_INPUT


class AnalysisFailedError(CliError):
    """The command ran and the subject failed; the findings travel in ``data``."""

    code = "analysis_failed"
    exit_code = EXIT_ANALYSIS


@contextmanager
def translated_errors() -> Iterator[None]:
    """Re-raise toolkit exceptions as CLI errors with the right exit code."""
    try:
        yield
    except (ComplexInputError, ConfigurationError) as exc:
        raise InputError.from_exception(exc) from exc
    except AnalysisError as exc:
        raise AnalysisFailedError.from_exception(exc) from exc
