"""Per-invocation state shared by every `tits-alt` command."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from tits.alternative.cli.output import OutputMode


@dataclass
class CliContext:
    """Resolved invocation state, carried on Click's `ctx.obj`.

    Populated by the root group before any subcommand runs.
    """

    output: OutputMode
    config_path: Optional[Path] = None
    verbose: int = 0
    log_format: str = "text"
