"""The local CAT(0) link condition for Euclidean triangle complexes.

For Euclidean triangles the curvature conditions on triangle interiors and on
edges hold identically, so local CAT(0) reduces to the girth of every vertex
link being at least 2π. Links at edge-interior points have girth exactly 2π
(two arcs of length π) or are trees, so they never fail.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from tits.alternative.algebra import TWO_PI, compare
from tits.alternative.common import ordered_map
from tits.alternative.complexes import TriangleComplex
from tits.alternative.links import Girth, girth, link_of_vertex

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VertexFailure:
    """A vertex whose link is too short."""

    vertex: str
    girth: Girth

    def to_dict(self) -> dict:
        return {"vertex": self.vertex, "girth": self.girth.exact, "cycle": list(self.girth.cycle)}


@dataclass(frozen=True)
class Cat0Report:
    """Result of :func:`check_local_cat0`.

    ``girths`` holds every vertex's link girth; forests have ``exact=None``.
    """

    passed: bool
    failures: tuple[VertexFailure, ...]
    girths: dict[str, Girth] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "pass": self.passed,
            "failures": [f.to_dict() for f in self.failures],
            "girths": {v: g.exact for v, g in sorted(self.girths.items())},
        }


def girth_at_least_two_pi(complex_: TriangleComplex, value: Girth) -> bool:
    """Whether a girth satisfies the link condition; acyclic links always do."""
    if value.exact is None:
        return True
    return compare(value.exact, TWO_PI, complex_.atom_env, complex_.tolerance) >= 0


def vertex_girths(complex_: TriangleComplex, threads: int = 1) -> dict[str, Girth]:
    """Girth of every vertex link, keyed by vertex id (sorted)."""
    names = sorted(complex_.vertices)
    values = ordered_map(lambda v: girth(link_of_vertex(complex_, v)), names, threads=threads)
    return dict(zip(names, values))


def check_local_cat0(complex_: TriangleComplex, threads: int = 1) -> Cat0Report:
    """Check the link condition at every vertex.

    Passes iff every vertex link has girth at least 2π. The comparison is
    exact whenever the girth minus 2π is a rational multiple of π.
    """
    girths = vertex_girths(complex_, threads=threads)
    failures = tuple(VertexFailure(v, g) for v, g in girths.items() if not girth_at_least_two_pi(complex_, g))
    for failure in failures:
        logger.info("Link too short", extra={"vertex": failure.vertex, "girth": str(failure.girth.exact)})
    return Cat0Report(passed=not failures, failures=failures, girths=girths)
