"""`tits-alt witness`: search for a free subgroup certified by sheared geodesics."""

from __future__ import annotations

from pathlib import Path
from typing import Optional

import click

from tits.alternative.checks import fundamental_group
from tits.alternative.cli.errors import InputError, translated_errors
from tits.alternative.cli.loading import COMPLEX_ARGUMENT, edge_option, read_complex, resolve_settings
from tits.alternative.cli.main import context, global_options
from tits.alternative.cli.output import emit
from tits.alternative.common import AnalysisMetrics
from tits.alternative.complexes import branching_locus
from tits.alternative.witness import find_gamma, find_sheared_connections, free_subgroup_certificate


@click.command()
@COMPLEX_ARGUMENT
@click.option("--edge", "edge_text", default=None, metavar="U,V", help="Thick edge to search from; defaults to the first branching edge.")
@click.option("--offsets", type=int, default=None, help="Grid offsets per incident triangle.")
@click.option("--budget", type=float, default=None, help="Longest connection searched.")
@click.option("--max-depth", type=int, default=None, help="Branching edges a connection may cross.")
@click.option("--word-length", type=int, default=None, help="Longest word in the certificate.")
@click.option("--tolerance", type=float, default=None, help="Tolerance for perpendicular arrivals.")
@click.option("--threads", type=int, default=None, help="Worker threads.")
@global_options
@click.pass_context
def witness(
    ctx: click.Context,
    complex_path: Path,
    edge_text: Optional[str],
    offsets: Optional[int],
    budget: Optional[float],
    max_depth: Optional[int],
    word_length: Optional[int],
    tolerance: Optional[float],
    threads: Optional[int],
    output: Optional[str],
    config_path: Optional[Path],
    verbose: int,
    log_format: Optional[str],
) -> None:
    """Find perpendicular connections at a thick edge, build Γ and verify the words.

    Exits 0 only when every reduced word up to ``--word-length`` maps to a
    sheared geodesic that does not close up.
    """
    cli_ctx = context(ctx, output=output, config_path=config_path, verbose=verbose, log_format=log_format)
    settings = resolve_settings(
        cli_ctx,
        offsets=offsets,
        budget=budget,
        max_branch_depth=max_depth,
        word_length=word_length,
        tolerance=tolerance,
        threads=threads,
    )
    complex_ = read_complex(complex_path, settings)
    if edge_text is not None:
        edge = edge_option(complex_, edge_text)
    else:
        thick = branching_locus(complex_)
        if not thick:
            raise InputError("the complex has no edge of degree at least 3", hint=["free subgroups are searched at thick edges"])
        edge = thick[0].key

    with AnalysisMetrics("witness") as metrics, translated_errors():
        presentation = fundamental_group(complex_)
        connections = find_sheared_connections(
            complex_,
            edge,
            offsets=settings.offsets,
            budget=settings.budget,
            max_depth=settings.max_branch_depth,
            threads=settings.threads,
            tolerance=settings.tolerance,
            presentation=presentation,
        )
        gamma = find_gamma(complex_, edge, connections, names=presentation.generator_names)
        certificate = free_subgroup_certificate(
            complex_, gamma, max_length=settings.word_length, threads=settings.threads, tolerance=settings.tolerance
        )
        metrics.record("connections", len(connections))
        metrics.record("words", len(certificate.checks))

    names = presentation.generator_names
    data = {
        "edge": list(edge),
        "connections": [c.to_dict(names) for c in connections],
        "witness": certificate.to_dict(),
    }
    text = (
        f"  {len(connections)} connections at {edge[0]},{edge[1]}\n"
        f"  h ↦ {data['witness']['homomorphism']['h']}, h′ ↦ {data['witness']['homomorphism']['h′']}\n"
        f"  {len(certificate.checks)} words checked, min separation {certificate.min_separation:.6g}"
    )
    emit(data, cli_ctx.output, text=text)
