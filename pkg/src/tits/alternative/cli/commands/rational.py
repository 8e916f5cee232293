"""`tits-alt rational`: rationality and extrationality verdicts."""

from __future__ import annotations

from pathlib import Path
from typing import Optional

import click

from tits.alternative.checks import check_extrational, check_rational
from tits.alternative.cli.errors import AnalysisFailedError, translated_errors
from tits.alternative.cli.loading import COMPLEX_ARGUMENT, read_complex, resolve_settings
from tits.alternative.cli.main import context, global_options
from tits.alternative.cli.output import emit
from tits.alternative.common import AnalysisMetrics


@click.command()
@COMPLEX_ARGUMENT
@click.option("--threads", type=int, default=None, help="Worker threads.")
@click.option("--require-extrational", is_flag=True, default=False, help="Also exit 1 when the complex is not extrational.")
@global_options
@click.pass_context
def rational(
    ctx: click.Context,
    complex_path: Path,
    threads: Optional[int],
    require_extrational: bool,
    output: Optional[str],
    config_path: Optional[Path],
    verbose: int,
    log_format: Optional[str],
) -> None:
    """Check that link cycles and segments are rational multiples of π.

    When they are, also reports extrationality: full circle links and trivial
    holonomy on every orientable patch.
    """
    cli_ctx = context(ctx, output=output, config_path=config_path, verbose=verbose, log_format=log_format)
    settings = resolve_settings(cli_ctx, threads=threads)
    complex_ = read_complex(complex_path, settings)

    with AnalysisMetrics("rational") as metrics, translated_errors():
        report = check_rational(complex_, threads=settings.threads)
        extrational = check_extrational(complex_, threads=settings.threads) if report.passed else None
        metrics.record("witnesses", len(report.witnesses))

    data = {"rational": report.to_dict(), "extrational": extrational.to_dict() if extrational else None}
    if not report.passed:
        raise AnalysisFailedError(
            "complex is not rational",
            detail="\n".join(f"{w.vertex}: {w.chain.kind} of length {w.chain.length}" for w in report.witnesses),
            data=data,
        )
    if require_extrational and extrational is not None and not extrational.passed:
        raise AnalysisFailedError(
            "complex is rational but not extrational",
            detail="\n".join(f"{c.vertex}: circle of length {c.length}" for c in extrational.short_circles) or None,
            data=data,
        )
    verdict = "extrational" if extrational is not None and extrational.passed else "rational, not extrational"
    emit(data, cli_ctx.output, text=f"  {verdict}")
