"""Root group for `tits-alt`.

Commands are loaded lazily, so `tits-alt validate` does not pay to import the
witness search or Jinja2.
"""

from __future__ import annotations

import importlib
from pathlib import Path
from typing import Any, Optional

import click

from tits.alternative.cli.context import CliContext
from tits.alternative.cli.output import OutputMode, resolve_output_mode, set_output_mode
from tits.alternative.observability import setup_logging

CONTEXT_SETTINGS = {
    "help_option_names": ["-h", "--help"],
    "max_content_width": 100,
}

#: Subcommand name -> "module:attribute", imported on first use.
COMMANDS: dict[str, str] = {
    "check": "tits.alternative.cli.commands.check:check",
    "links": "tits.alternative.cli.commands.links:links",
    "patches": "tits.alternative.cli.commands.patches:patches",
    "rational": "tits.alternative.cli.commands.rational:rational",
    "render": "tits.alternative.cli.commands.render:render",
    "trace": "tits.alternative.cli.commands.trace:trace",
    "unfold": "tits.alternative.cli.commands.unfold:unfold",
    "validate": "tits.alternative.cli.commands.validate:validate",
    "witness": "tits.alternative.cli.commands.witness:witness",
}

EPILOG = """\
Exit codes: 0 pass, 1 the analysis ran and the complex failed, 2 bad input.

\b
Typical session:
  tits-alt validate complex.json
  tits-alt check complex.json
  tits-alt witness complex.json --edge u0,u1
"""

LOG_LEVELS = ("WARNING", "INFO", "DEBUG")


class LazyGroup(click.Group):
    """A group whose subcommands are imported on demand."""

    def list_commands(self, ctx: click.Context) -> list[str]:
        """Every known command, whether or not it has been imported."""
        return sorted(set(super().list_commands(ctx)) | set(COMMANDS))

    def get_command(self, ctx: click.Context, cmd_name: str) -> Optional[click.Command]:
        """Import and return a command the first time it is used."""
        registered = super().get_command(ctx, cmd_name)
        if registered is not None:
            return registered
        target = COMMANDS.get(cmd_name)
        if target is None:
            return None
        module_name, _, attr = target.partition(":")
        return getattr(importlib.import_module(module_name), attr)


def _configure_logging(verbose: int, log_format: str) -> None:
    setup_logging(level=LOG_LEVELS[min(verbose, len(LOG_LEVELS) - 1)], structured=log_format == "json")


def _output_option(func: Any) -> Any:
    return click.option(
        "--output",
        "output",
        type=click.Choice([mode.value for mode in OutputMode]),
        default=None,
        help="Output format. Defaults to text at a terminal, json when redirected.",
    )(func)


def _config_option(func: Any) -> Any:
    return click.option(
        "--config",
        "config_path",
        type=click.Path(dir_okay=False, path_type=Path),
        default=None,
        help="YAML file with analysis settings.",
    )(func)


def _verbose_option(func: Any) -> Any:
    return click.option("--verbose", "-v", count=True, help="Log progress to stderr; repeat for debug detail.")(func)


def _log_format_option(default: Optional[str]) -> Any:
    return click.option(
        "--log-format",
        type=click.Choice(["text", "json"]),
        default=default,
        show_default=default is not None,
        help="Log line format on stderr.",
    )


@click.group(cls=LazyGroup, context_settings=CONTEXT_SETTINGS, epilog=EPILOG)
@click.version_option(package_name="tits-alternative-toolkit", prog_name="tits-alt")
@_output_option
@_config_option
@_verbose_option
@_log_format_option("text")
@click.pass_context
def cli(ctx: click.Context, output: Optional[str], config_path: Optional[Path], verbose: int, log_format: str) -> None:
    """Check, normalize and analyse 2-dimensional CAT(0) triangle complexes."""
    resolved = resolve_output_mode(output)
    set_output_mode(resolved)
    _configure_logging(verbose, log_format)
    ctx.obj = CliContext(output=resolved, config_path=config_path, verbose=verbose, log_format=log_format)


def context(
    ctx: click.Context,
    *,
    output: Optional[str] = None,
    config_path: Optional[Path] = None,
    verbose: int = 0,
    log_format: Optional[str] = None,
) -> CliContext:
    """The resolved `CliContext` with any flags given after the subcommand applied.

    A command invoked on its own, without the root group, gets a fresh context.
    """
    existing: Any = ctx.find_object(CliContext)
    if existing is None:
        existing = CliContext(output=resolve_output_mode(None))
        ctx.obj = existing
    if output:
        existing.output = OutputMode(output)
    if config_path is not None:
        existing.config_path = config_path
    if verbose or log_format:
        existing.verbose = max(existing.verbose, verbose)
        existing.log_format = log_format or existing.log_format
        _configure_logging(existing.verbose, existing.log_format)
    set_output_mode(existing.output)
    return existing


def global_options(func: Any) -> Any:
    """Accept the root group's flags after the subcommand name too.

    `tits-alt check x.json --output json` then means the same as
    `tits-alt --output json check x.json`.
    """
    for option in (_log_format_option(None), _verbose_option, _config_option, _output_option):
        func = option(func)
    return func
