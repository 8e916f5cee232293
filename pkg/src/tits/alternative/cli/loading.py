"""Settings and complex loading shared by every command."""

from __future__ import annotations

from pathlib import Path
from typing import Any

import click

from tits.alternative.cli.context import CliContext
from tits.alternative.cli.errors import InputError, translated_errors
from tits.alternative.cli.output import set_float_digits
from tits.alternative.complexes import EdgeKey, TriangleComplex, load_complex, parse_edge
from tits.alternative.config import AnalysisSettings, load_settings
from tits.alternative.models import ComplexDocument

COMPLEX_ARGUMENT = click.argument(
    "complex_path",
    metavar="COMPLEX",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
)


def resolve_settings(cli_ctx: CliContext, **overrides: Any) -> AnalysisSettings:
    """Layered settings with this command's flags on top."""
    with translated_errors():
        settings = load_settings(cli_ctx.config_path, overrides=overrides)
    set_float_digits(settings.float_digits)
    return settings


def read_complex(path: Path, settings: AnalysisSettings) -> TriangleComplex:
    """Load and validate a complex document, mapping failures to exit code 2."""
    with translated_errors():
        return load_complex(ComplexDocument.from_file(path), tolerance=settings.tolerance)


def edge_option(complex_: TriangleComplex, text: str) -> EdgeKey:
    """Resolve a ``u,v`` edge against the complex."""
    with translated_errors():
        key = parse_edge(text)
        complex_.edge(key)
    return key


def vertex_option(complex_: TriangleComplex, name: str) -> str:
    """Check a vertex id against the complex."""
    if name not in complex_.vertices:
        raise InputError(f"unknown vertex {name!r}", data={"vertex": name})
    return name
