"""`tits-alt render`: SVG pictures of a link or a patch development."""

from __future__ import annotations

from pathlib import Path
from typing import Optional

import click

from tits.alternative.cli.errors import InputError, translated_errors
from tits.alternative.cli.loading import COMPLEX_ARGUMENT, read_complex, resolve_settings, vertex_option
from tits.alternative.cli.main import context, global_options
from tits.alternative.cli.output import emit
from tits.alternative.common import AnalysisMetrics
from tits.alternative.complexes import patches
from tits.alternative.links import link_of_vertex
from tits.alternative.rendering import render_link, render_patch, write_svg


@click.command()
@COMPLEX_ARGUMENT
@click.option("--svg", "svg_path", type=click.Path(dir_okay=False, path_type=Path), required=True, help="Where to write the picture.")
@click.option("--vertex", default=None, help="Draw the link at this vertex.")
@click.option("--patch", "patch_id", type=int, default=None, help="Draw a development of this patch.")
@global_options
@click.pass_context
def render(
    ctx: click.Context,
    complex_path: Path,
    svg_path: Path,
    vertex: Optional[str],
    patch_id: Optional[int],
    output: Optional[str],
    config_path: Optional[Path],
    verbose: int,
    log_format: Optional[str],
) -> None:
    """Write an SVG of one link (``--vertex``) or one patch (``--patch``).

    Traced paths are drawn by ``tits-alt trace --svg``.
    """
    cli_ctx = context(ctx, output=output, config_path=config_path, verbose=verbose, log_format=log_format)
    settings = resolve_settings(cli_ctx)
    complex_ = read_complex(complex_path, settings)
    if (vertex is None) == (patch_id is None):
        raise InputError("pass exactly one of --vertex or --patch")

    with AnalysisMetrics("render"), translated_errors():
        if vertex is not None:
            picture = render_link(link_of_vertex(complex_, vertex_option(complex_, vertex)))
            subject = {"vertex": vertex}
        else:
            assert patch_id is not None
            found = patches(complex_)
            if not 0 <= patch_id < len(found):
                raise InputError(f"unknown patch {patch_id}", data={"patches": len(found)})
            picture = render_patch(complex_, found[patch_id])
            subject = {"patch": patch_id}
    write_svg(picture, svg_path)
    emit({**subject, "svg": str(svg_path)}, cli_ctx.output, text=f"  wrote {svg_path}")
