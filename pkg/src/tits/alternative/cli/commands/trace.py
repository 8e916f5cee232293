"""`tits-alt trace`: trace a straight path through the complex."""

from __future__ import annotations

from pathlib import Path
from typing import Optional, Union

import click

from tits.alternative.algebra import HALF_PI, AngleExpr, parse_angle
from tits.alternative.cli.errors import InputError, translated_errors
from tits.alternative.cli.loading import COMPLEX_ARGUMENT, edge_option, read_complex, resolve_settings, vertex_option
from tits.alternative.cli.main import context, global_options
from tits.alternative.cli.output import emit
from tits.alternative.common import AnalysisMetrics
from tits.alternative.complexes import TriangleComplex
from tits.alternative.geodesics import BranchPolicy, GeodesicPath, StartPoint, trace_all
from tits.alternative.rendering import render_trace, write_svg


def _start(
    complex_: TriangleComplex,
    triangle: int,
    at: Optional[str],
    edge_text: Optional[str],
    offset: Optional[float],
    vertex: Optional[str],
) -> StartPoint:
    given = [name for name, value in (("--at", at), ("--edge", edge_text), ("--vertex", vertex)) if value is not None]
    if len(given) != 1:
        raise InputError("pass exactly one of --at, --edge or --vertex", data={"given": given})
    if at is not None:
        try:
            x, y = (float(part) for part in at.split(","))
        except ValueError:
            raise InputError(f"--at takes local coordinates X,Y, got {at!r}") from None
        return StartPoint.interior(triangle, x, y)
    if edge_text is not None:
        if offset is None:
            raise InputError("--edge needs --offset")
        return StartPoint.on_edge(edge_option(complex_, edge_text), offset, triangle)
    assert vertex is not None
    return StartPoint.at_vertex(vertex_option(complex_, vertex), triangle)


def _angle(angle: Optional[str], radians: Optional[float], perpendicular: bool) -> Union[AngleExpr, float]:
    given = [name for name, value in (("--angle", angle), ("--radians", radians)) if value is not None]
    if perpendicular:
        given.append("--perpendicular")
    if len(given) != 1:
        raise InputError("pass exactly one of --angle, --radians or --perpendicular", data={"given": given})
    if perpendicular:
        return HALF_PI
    if radians is not None:
        return radians
    with translated_errors():
        return parse_angle(angle)


def _policy(branching: str, choices: Optional[str], max_depth: int) -> BranchPolicy:
    if branching == "fixed":
        try:
            picked = [int(part) for part in (choices or "").split(",") if part.strip()]
        except ValueError:
            raise InputError(f"--choices takes triangle ids, got {choices!r}") from None
        return BranchPolicy.fixed(picked)
    if choices:
        raise InputError("--choices needs --branching fixed")
    return BranchPolicy.enumerate(max_depth) if branching == "enumerate" else BranchPolicy.stop()


def _summary(path: GeodesicPath) -> str:
    return f"  length {path.length:.6g} through {len(path.triangles)} triangles, {path.end.kind.value}"


@click.command()
@COMPLEX_ARGUMENT
@click.option("--triangle", type=int, required=True, help="Triangle the path starts into.")
@click.option("--at", default=None, metavar="X,Y", help="Start at local coordinates of the triangle.")
@click.option("--edge", "edge_text", default=None, metavar="U,V", help="Start on this edge.")
@click.option("--offset", type=float, default=None, help="Distance of the edge start from the smaller endpoint.")
@click.option("--vertex", default=None, help="Start at this vertex.")
@click.option("--angle", default=None, help="Exact launch angle as a multiple of π, e.g. 1/4.")
@click.option("--radians", type=float, default=None, help="Numeric launch angle.")
@click.option("--perpendicular", is_flag=True, default=False, help="Launch at exactly π/2 from an edge.")
@click.option("--budget", type=float, default=None, help="Length budget.")
@click.option(
    "--branching",
    type=click.Choice(["stop", "enumerate", "fixed"]),
    default="stop",
    show_default=True,
    help="What to do at branching edges.",
)
@click.option("--choices", default=None, metavar="T1,T2,…", help="Triangles to enter at successive branching edges.")
@click.option("--max-depth", type=int, default=None, help="Branching edges an enumerated path may cross.")
@click.option("--svg", "svg_path", type=click.Path(dir_okay=False, path_type=Path), default=None, help="Draw the developed strip.")
@global_options
@click.pass_context
def trace(
    ctx: click.Context,
    complex_path: Path,
    triangle: int,
    at: Optional[str],
    edge_text: Optional[str],
    offset: Optional[float],
    vertex: Optional[str],
    angle: Optional[str],
    radians: Optional[float],
    perpendicular: bool,
    budget: Optional[float],
    branching: str,
    choices: Optional[str],
    max_depth: Optional[int],
    svg_path: Optional[Path],
    output: Optional[str],
    config_path: Optional[Path],
    verbose: int,
    log_format: Optional[str],
) -> None:
    """Trace a geodesic from a point and direction until it stops.

    Reports the crossing sequence, the development coordinates and why the
    path ended. With ``--branching enumerate`` every continuation is listed.
    """
    cli_ctx = context(ctx, output=output, config_path=config_path, verbose=verbose, log_format=log_format)
    settings = resolve_settings(cli_ctx, budget=budget, max_branch_depth=max_depth)
    complex_ = read_complex(complex_path, settings)
    if perpendicular and edge_text is None:
        raise InputError("--perpendicular launches from an edge", hint=["add --edge U,V --offset S"])

    start = _start(complex_, triangle, at, edge_text, offset, vertex)
    launch = _angle(angle, radians, perpendicular)
    policy = _policy(branching, choices, settings.max_branch_depth)
    with AnalysisMetrics("trace") as metrics, translated_errors():
        paths = trace_all(complex_, start, launch, settings.budget, policy, vertex_tolerance=settings.vertex_tolerance)
        metrics.record("paths", len(paths))

    if svg_path is not None:
        write_svg(render_trace(complex_, paths[0]), svg_path)

    data = {"paths": [p.to_dict() for p in paths]}
    emit(data, cli_ctx.output, text="\n".join(_summary(p) for p in paths))
