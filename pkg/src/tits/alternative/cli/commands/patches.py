"""`tits-alt patches`: patches off the branching locus, their holonomy and shear data."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Optional

import click

from tits.alternative.checks import check_extrational, check_rational
from tits.alternative.checks.rationality import patch_holonomy, shear_spectrum
from tits.alternative.cli.errors import InputError, translated_errors
from tits.alternative.cli.loading import COMPLEX_ARGUMENT, read_complex, resolve_settings
from tits.alternative.cli.main import context, global_options
from tits.alternative.cli.output import emit
from tits.alternative.common import AnalysisMetrics
from tits.alternative.complexes import Patch, TriangleComplex
from tits.alternative.complexes import patches as decompose_patches
from tits.alternative.exceptions import NotExtrational
from tits.alternative.rendering import render_patch, write_svg

logger = logging.getLogger(__name__)


def _spectrum(complex_: TriangleComplex, patch: Patch) -> Optional[dict]:
    try:
        return shear_spectrum(complex_, patch).to_dict()
    except NotExtrational as exc:
        logger.info("No shear spectrum", extra={"patch": patch.id, "reason": exc.message})
        return None


@click.command()
@COMPLEX_ARGUMENT
@click.option("--patch", "patch_id", type=int, default=None, help="Only this patch.")
@click.option("--svg", "svg_path", type=click.Path(dir_okay=False, path_type=Path), default=None, help="Draw a development of the patch.")
@global_options
@click.pass_context
def patches(
    ctx: click.Context,
    complex_path: Path,
    patch_id: Optional[int],
    svg_path: Optional[Path],
    output: Optional[str],
    config_path: Optional[Path],
    verbose: int,
    log_format: Optional[str],
) -> None:
    """List patches with their completion data and holonomy ψ.

    Shear denominators q, q′ are reported when the complex is extrational.
    """
    cli_ctx = context(ctx, output=output, config_path=config_path, verbose=verbose, log_format=log_format)
    settings = resolve_settings(cli_ctx)
    complex_ = read_complex(complex_path, settings)

    with AnalysisMetrics("patches") as metrics, translated_errors():
        found = decompose_patches(complex_)
        if patch_id is not None:
            if not 0 <= patch_id < len(found):
                raise InputError(f"unknown patch {patch_id}", data={"patches": len(found)})
            found = [found[patch_id]]
        extrational = check_rational(complex_).passed and check_extrational(complex_).passed
        reports = []
        for patch in found:
            holonomy = patch_holonomy(complex_, patch)
            spectrum = _spectrum(complex_, patch) if extrational and patch.orientable else None
            reports.append({**patch.to_dict(), "holonomy": holonomy.to_dict(), "shear": spectrum})
        metrics.record("patches", len(reports))

    if svg_path is not None:
        if len(found) != 1:
            raise InputError("--svg draws a single patch", hint=["add --patch N"])
        write_svg(render_patch(complex_, found[0]), svg_path)

    lines = [
        f"  patch {r['id']}: {len(r['triangles'])} triangles, χ={r['euler_characteristic']}, ψ {r['holonomy']['verdict']}"
        for r in reports
    ]
    emit({"extrational": extrational, "patches": reports}, cli_ctx.output, text="\n".join(lines))
