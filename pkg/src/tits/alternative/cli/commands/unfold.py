"""`tits-alt unfold`: unfold every vertex whose link is a 2π cycle wedged with a clover."""

from __future__ import annotations

from pathlib import Path
from typing import Optional

import click

from tits.alternative.cli.errors import translated_errors
from tits.alternative.cli.loading import COMPLEX_ARGUMENT, read_complex, resolve_settings, vertex_option
from tits.alternative.cli.main import context, global_options
from tits.alternative.cli.output import emit
from tits.alternative.common import AnalysisMetrics
from tits.alternative.complexes import dump_complex
from tits.alternative.folding import unfold_all, unfold_once, verify_folding_properties


@click.command()
@COMPLEX_ARGUMENT
@click.option("--vertex", default=None, help="Unfold only this vertex, once.")
@click.option(
    "--write",
    "write_path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Also write the unfolded complex document here.",
)
@global_options
@click.pass_context
def unfold(
    ctx: click.Context,
    complex_path: Path,
    vertex: Optional[str],
    write_path: Optional[Path],
    output: Optional[str],
    config_path: Optional[Path],
    verbose: int,
    log_format: Optional[str],
) -> None:
    """Unfold to a fixpoint and check what unfolding preserves.

    The result carries the unfolded complex in the document format, the step
    log, and the preserved properties. Exits 1 when ``--vertex`` is not
    unfoldable or a property fails.
    """
    cli_ctx = context(ctx, output=output, config_path=config_path, verbose=verbose, log_format=log_format)
    settings = resolve_settings(cli_ctx)
    complex_ = read_complex(complex_path, settings)

    with AnalysisMetrics("unfold") as metrics, translated_errors():
        if vertex is not None:
            unfolded, step = unfold_once(complex_, vertex_option(complex_, vertex))
            steps = [step]
        else:
            unfolded, steps = unfold_all(complex_)
        report = verify_folding_properties(complex_, unfolded, steps, require_fixpoint=vertex is None)
        metrics.record("steps", len(steps))

    if write_path is not None:
        write_path.parent.mkdir(parents=True, exist_ok=True)
        write_path.write_text(dump_complex(unfolded), encoding="utf-8", newline="\n")

    data = {
        "complex": unfolded.to_document().model_dump(),
        "steps": [s.to_dict() for s in steps],
        "properties": report.to_dict(),
    }
    text = "\n".join(
        [f"  {len(steps)} unfolding step{'' if len(steps) == 1 else 's'}"]
        + [f"  {s.vertex} → {s.v1}, {s.v2} (duplicated edge to {s.y})" for s in steps]
    )
    emit(data, cli_ctx.output, text=text)
