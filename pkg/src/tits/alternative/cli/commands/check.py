"""`tits-alt check`: the local CAT(0) link condition and basic topology."""

from __future__ import annotations

from pathlib import Path
from typing import Optional

import click

from tits.alternative.cli.errors import AnalysisFailedError, translated_errors
from tits.alternative.cli.loading import COMPLEX_ARGUMENT, read_complex, resolve_settings
from tits.alternative.cli.main import context, global_options
from tits.alternative.cli.output import emit
from tits.alternative.common import AnalysisMetrics
from tits.alternative.checks import betti_numbers, check_local_cat0, fundamental_group
from tits.alternative.complexes import classify, euler_characteristic

SIMPLE_CONNECTIVITY_NOTE = "Simple connectivity is not decided; the presentation is reported as is."


@click.command()
@COMPLEX_ARGUMENT
@click.option("--tolerance", type=float, default=None, help="Relative tolerance for lengths and angle comparisons.")
@click.option("--threads", type=int, default=None, help="Worker threads for per-vertex checks.")
@global_options
@click.pass_context
def check(
    ctx: click.Context,
    complex_path: Path,
    tolerance: Optional[float],
    threads: Optional[int],
    output: Optional[str],
    config_path: Optional[Path],
    verbose: int,
    log_format: Optional[str],
) -> None:
    """Check that every vertex link has girth at least 2π.

    Exits 1 and names the failing vertices when the link condition fails.
    """
    cli_ctx = context(ctx, output=output, config_path=config_path, verbose=verbose, log_format=log_format)
    settings = resolve_settings(cli_ctx, tolerance=tolerance, threads=threads)
    complex_ = read_complex(complex_path, settings)

    with AnalysisMetrics("check") as metrics, translated_errors():
        report = check_local_cat0(complex_, threads=settings.threads)
        shape = classify(complex_)
        b0, b1, b2 = betti_numbers(complex_)
        presentation = fundamental_group(complex_).to_dict() if shape.components == 1 else None
        metrics.record("vertices", len(complex_.vertices))
        metrics.record("failures", len(report.failures))

    data = {
        **report.to_dict(),
        "euler_characteristic": euler_characteristic(complex_),
        "betti": [b0, b1, b2],
        "essential": shape.essential,
        "thick": shape.thick,
        "fundamental_group": presentation,
        "note": SIMPLE_CONNECTIVITY_NOTE,
    }
    if not report.passed:
        failing = [f.vertex for f in report.failures]
        raise AnalysisFailedError(
            f"link condition fails at {len(failing)} vertex{'' if len(failing) == 1 else 'es'}",
            detail="\n".join(f"{f.vertex}: girth {f.girth.exact}" for f in report.failures),
            hint=["every vertex link needs girth at least 2π; inspect them with `tits-alt links`"],
            data=data,
        )
    emit(data, cli_ctx.output, text=f"  locally CAT(0): every vertex link has girth ≥ 2π  (b₁={b1})\n  {SIMPLE_CONNECTIVITY_NOTE}")
