"""`tits-alt validate`: load a complex document and report its shape.

Every geometric invariant of the file format is checked on load; a document
that gets this far is safe to hand to every other command.
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional

import click

from tits.alternative.cli.loading import COMPLEX_ARGUMENT, read_complex, resolve_settings
from tits.alternative.cli.main import context, global_options
from tits.alternative.cli.output import emit
from tits.alternative.common import AnalysisMetrics
from tits.alternative.complexes import branching_locus, classify, euler_characteristic


@click.command()
@COMPLEX_ARGUMENT
@click.option("--tolerance", type=float, default=None, help="Relative tolerance for lengths.")
@global_options
@click.pass_context
def validate(
    ctx: click.Context,
    complex_path: Path,
    tolerance: Optional[float],
    output: Optional[str],
    config_path: Optional[Path],
    verbose: int,
    log_format: Optional[str],
) -> None:
    """Check a complex document: simplicial, angle sums exactly π, consistent lengths."""
    cli_ctx = context(ctx, output=output, config_path=config_path, verbose=verbose, log_format=log_format)
    settings = resolve_settings(cli_ctx, tolerance=tolerance)
    with AnalysisMetrics("validate") as metrics:
        complex_ = read_complex(complex_path, settings)
        shape = classify(complex_)
        metrics.record("triangles", len(complex_.triangles))

    data = {
        "valid": True,
        "vertices": len(complex_.vertices),
        "edges": len(complex_.edges),
        "triangles": len(complex_.triangles),
        "atoms": complex_.atom_env.to_document(),
        "essential": shape.essential,
        "thick": shape.thick,
        "components": shape.components,
        "euler_characteristic": euler_characteristic(complex_),
        "branching_edges": [list(e.key) for e in branching_locus(complex_)],
    }
    text = (
        f"  {complex_path}: {data['vertices']} vertices, {data['edges']} edges, {data['triangles']} triangles\n"
        f"  essential={shape.essential} thick={shape.thick} components={shape.components} χ={data['euler_characteristic']}"
    )
    emit(data, cli_ctx.output, text=text)
