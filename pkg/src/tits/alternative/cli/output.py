"""Output rendering for the `tits-alt` CLI.

Two modes, one envelope. Text is for people; JSON is for pipelines and is
canonical: sorted keys, floats rounded to a fixed number of significant
digits, exact angles as ``{"pi": "p/q", "atoms": {...}, "display": "..."}``.
The same inputs and flags always give the same bytes.
"""

from __future__ import annotations

import dataclasses
import json
import math
import sys
from enum import Enum
from fractions import Fraction
from typing import TYPE_CHECKING, Any, Optional

import click
import numpy as np

from tits.alternative.algebra import AngleExpr

if TYPE_CHECKING:  # pragma: no cover - import cycle guard
    from tits.alternative.cli.errors import CliError

DEFAULT_DIGITS = 12


class OutputMode(str, Enum):
    """How a command renders its result."""

    TEXT = "text"
    JSON = "json"


def default_output_mode() -> OutputMode:
    """Text at a terminal, JSON when redirected."""
    return OutputMode.TEXT if sys.stdout.isatty() else OutputMode.JSON


def resolve_output_mode(explicit: Optional[str]) -> OutputMode:
    """Honour an explicit `--output`, else infer from the stream."""
    return OutputMode(explicit) if explicit else default_output_mode()


#: The mode resolved for this process, recorded so error rendering can find it.
_resolved_mode: Optional[OutputMode] = None
_digits: int = DEFAULT_DIGITS


def set_output_mode(mode: Optional[OutputMode]) -> None:
    """Record the resolved mode for the rest of this invocation."""
    global _resolved_mode
    _resolved_mode = mode


def set_float_digits(digits: int) -> None:
    """Significant digits used for floats in JSON output."""
    global _digits
    _digits = digits


def current_output_mode() -> OutputMode:
    """The mode for the running command, falling back to stream detection."""
    if _resolved_mode is not None:
        return _resolved_mode
    ctx = click.get_current_context(silent=True)
    obj = getattr(ctx, "obj", None) if ctx is not None else None
    mode = getattr(obj, "output", None)
    return mode if isinstance(mode, OutputMode) else default_output_mode()


def _round(value: float, digits: int) -> Any:
    if not math.isfinite(value):
        return str(value)
    if value == 0:
        return 0.0
    rounded = float(f"{value:.{digits}g}")
    return rounded if rounded != 0 else 0.0


def canonical(data: Any, digits: Optional[int] = None) -> Any:
    """Plain JSON-ready data with angles, fractions, arrays and floats normalized."""
    digits = _digits if digits is None else digits
    if isinstance(data, AngleExpr):
        return {**data.to_document(), "display": str(data)}
    if isinstance(data, Enum):
        return data.value
    if data is None or isinstance(data, (bool, str, int)):
        return data
    if isinstance(data, Fraction):
        return str(data)
    if isinstance(data, (float, np.floating)):
        return _round(float(data), digits)
    if isinstance(data, np.integer):
        return int(data)
    if isinstance(data, np.ndarray):
        return canonical(data.tolist(), digits)
    if isinstance(data, dict):
        return {str(k): canonical(v, digits) for k, v in data.items()}
    if isinstance(data, (list, tuple, set, frozenset)):
        items = sorted(data, key=str) if isinstance(data, (set, frozenset)) else data
        return [canonical(v, digits) for v in items]
    if hasattr(data, "to_dict"):
        return canonical(data.to_dict(), digits)
    if dataclasses.is_dataclass(data) and not isinstance(data, type):
        return canonical(dataclasses.asdict(data), digits)
    return str(data)


def dumps(data: Any) -> str:
    """Canonical JSON text."""
    return json.dumps(canonical(data), indent=2, sort_keys=True, ensure_ascii=False)


def render_error(error: "CliError", mode: OutputMode) -> str:
    """Format a failure for the given mode."""
    if mode is OutputMode.JSON:
        return dumps({"ok": False, "error": error.as_dict()})

    lines = [f"Error: {error.format_message()}  [{error.code}]"]
    if error.detail:
        lines += ["", *_indent(error.detail.splitlines())]
    if error.hint:
        lines += ["", f"  {'Hint' if len(error.hint) == 1 else 'Hints'}:"]
        lines += [f"    {item}" for item in error.hint]
    return "\n".join(lines)


def emit(data: Any, mode: OutputMode, *, text: Optional[str] = None) -> None:
    """Write a successful result to stdout.

    `text` is the human rendering; when absent, JSON is used for both.
    """
    if mode is OutputMode.JSON:
        click.echo(dumps({"ok": True, "data": data}))
    else:
        click.echo(text if text is not None else dumps(data))


def _indent(lines: list[str]) -> list[str]:
    return [f"  {line}" if line else "" for line in lines]
