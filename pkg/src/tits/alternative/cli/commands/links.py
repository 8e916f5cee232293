"""`tits-alt links`: link graphs with their girth, chains and clover structure."""

from __future__ import annotations

from pathlib import Path
from typing import Optional

import click

from tits.alternative.cli.errors import InputError, translated_errors
from tits.alternative.cli.loading import COMPLEX_ARGUMENT, edge_option, read_complex, resolve_settings, vertex_option
from tits.alternative.cli.main import context, global_options
from tits.alternative.cli.output import emit
from tits.alternative.common import AnalysisMetrics, ordered_map
from tits.alternative.links import LinkGraph, classify_clover, decompose, find_unfoldable, girth, link_of_edge_point, link_of_vertex
from tits.alternative.rendering import render_link, write_svg


def describe(link: LinkGraph) -> dict:
    """Everything the command reports about one link."""
    shortest = girth(link)
    parts = decompose(link)
    clover = classify_clover(link)
    wedge = find_unfoldable(link)
    return {
        **link.to_dict(),
        "girth": {"exact": shortest.exact, "numeric": shortest.numeric, "cycle": list(shortest.cycle)},
        "decomposition": {
            "cycles": [c.to_dict() for c in parts.cycles],
            "segments": [c.to_dict() for c in parts.segments],
            "hairs": [c.to_dict() for c in parts.hairs],
        },
        "clover": {"is_clover": clover.is_clover, "basepoint": clover.basepoint, "tips": clover.tips},
        "unfoldable": None if wedge is None else {"y": wedge.y, "cycle": list(wedge.cycle), "clover": list(wedge.clover)},
    }


@click.command()
@COMPLEX_ARGUMENT
@click.option("--vertex", default=None, help="Only the link at this vertex.")
@click.option("--edge", "edge_text", default=None, metavar="U,V", help="The link at an interior point of this edge.")
@click.option("--threads", type=int, default=None, help="Worker threads.")
@click.option("--svg", "svg_path", type=click.Path(dir_okay=False, path_type=Path), default=None, help="Draw the selected link.")
@global_options
@click.pass_context
def links(
    ctx: click.Context,
    complex_path: Path,
    vertex: Optional[str],
    edge_text: Optional[str],
    threads: Optional[int],
    svg_path: Optional[Path],
    output: Optional[str],
    config_path: Optional[Path],
    verbose: int,
    log_format: Optional[str],
) -> None:
    """Report vertex links (all of them by default) or the link of an edge point."""
    cli_ctx = context(ctx, output=output, config_path=config_path, verbose=verbose, log_format=log_format)
    settings = resolve_settings(cli_ctx, threads=threads)
    complex_ = read_complex(complex_path, settings)
    if vertex is not None and edge_text is not None:
        raise InputError("pass --vertex or --edge, not both")
    if svg_path is not None and vertex is None and edge_text is None:
        raise InputError("--svg draws a single link", hint=["add --vertex V or --edge U,V"])

    with AnalysisMetrics("links") as metrics, translated_errors():
        if vertex is not None:
            graphs = [link_of_vertex(complex_, vertex_option(complex_, vertex))]
        elif edge_text is not None:
            graphs = [link_of_edge_point(complex_, edge_option(complex_, edge_text))]
        else:
            graphs = [link_of_vertex(complex_, v) for v in sorted(complex_.vertices)]
        reports = ordered_map(describe, graphs, threads=settings.threads)
        metrics.record("links", len(reports))

    if svg_path is not None:
        write_svg(render_link(graphs[0]), svg_path)

    lines = []
    for report in reports:
        shortest = report["girth"]["exact"]
        mark = "  unfoldable" if report["unfoldable"] else ""
        lines.append(f"  {report['center']}: {len(report['arcs'])} arcs, girth {shortest if shortest is not None else '∞'}{mark}")
    emit({"links": reports}, cli_ctx.output, text="\n".join(lines))
