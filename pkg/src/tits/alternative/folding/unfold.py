"""Unfolding vertices whose links are a 2π cycle wedged with a clover.

Unfolding splits such a vertex ``v`` into ``v~1`` (the corners whose link
arcs form the cycle Γ1) and ``v~2`` (the clover Γ2). Only the edge ``vw``
towards the wedge point ``y = w`` is duplicated; every other edge at ``v``
goes to one side. Triangles keep their ids, so the quotient map back to the
original complex is the identity on triangles and sends ``v~i`` to ``v``.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Optional

from tits.alternative.algebra import compare
from tits.alternative.checks import check_local_cat0
from tits.alternative.complexes import EdgeKey, TriangleComplex, classify, edge_key, euler_characteristic
from tits.alternative.complexes.topology import component_count
from tits.alternative.exceptions import NotUnfoldable, PropertyViolation
from tits.alternative.links import Unfoldable, find_unfoldable, girth, link_of_vertex, unfoldable_wedges

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class UnfoldStep:
    """One unfolding move.

    Attributes:
        vertex: The split vertex of the input complex.
        y: Neighbour ``w`` whose edge ``vw`` was duplicated.
        cycle: Triangle ids of the 2π cycle Γ1.
        clover: Triangle ids of the clover Γ2.
        v1: New vertex carrying Γ1.
        v2: New vertex carrying Γ2.
        e1: Copy of ``vw`` at ``v1``.
        e2: Copy of ``vw`` at ``v2``.
        quotient: New vertex id to old vertex id.
    """

    vertex: str
    y: str
    cycle: tuple[int, ...]
    clover: tuple[int, ...]
    v1: str
    v2: str
    e1: EdgeKey
    e2: EdgeKey
    quotient: dict[str, str] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "vertex": self.vertex,
            "y": self.y,
            "cycle": list(self.cycle),
            "clover": list(self.clover),
            "new_vertices": [self.v1, self.v2],
            "new_edges": [list(self.e1), list(self.e2)],
        }


@dataclass(frozen=True)
class FoldingReport:
    """Which folding invariants hold between a complex and its unfolding."""

    properties: dict[str, bool]
    details: dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.properties.values())

    def to_dict(self) -> dict:
        return {"pass": self.passed, "properties": dict(sorted(self.properties.items())), "details": self.details}


def _fresh(name: str, taken: set[str]) -> str:
    while name in taken:
        name += "'"
    return name


def unfold_once(complex_: TriangleComplex, vertex: str, cycle: Optional[Sequence[int]] = None) -> tuple[TriangleComplex, UnfoldStep]:
    """Split ``vertex`` along an unfoldable wedge of its link.

    Without ``cycle`` the first wedge in tie-break order is used; otherwise the
    wedge whose 2π cycle consists of exactly those triangle ids.

    Raises:
        UnknownVertex: ``vertex`` is not in the complex.
        NotUnfoldable: The link has no (matching) wedge.
    """
    link = link_of_vertex(complex_, vertex)
    wanted = tuple(sorted(cycle)) if cycle is not None else None
    wedge: Optional[Unfoldable] = next((w for w in unfoldable_wedges(link) if wanted in (None, w.cycle)), None)
    if wedge is None:
        raise NotUnfoldable(
            f"Link at {vertex} is not a 2π cycle wedged with a clover",
            data={"vertex": vertex, "cycle": list(wanted) if wanted else None},
        )

    taken = set(complex_.vertices)
    v1 = _fresh(f"{vertex}~1", taken)
    v2 = _fresh(f"{vertex}~2", taken | {v1})
    side = {t: v1 for t in wedge.cycle} | {t: v2 for t in wedge.clover}

    vertices: list[str] = []
    for name in complex_.vertices:
        vertices.extend([v1, v2] if name == vertex else [name])
    triangles = []
    for tri in complex_.triangles:
        verts = [side[tri.id] if v == vertex else v for v in tri.vertices]
        triangles.append((verts, tri.angles, tri.sides))
    unfolded = TriangleComplex(vertices, triangles, complex_.atom_env, complex_.tolerance)

    step = UnfoldStep(
        vertex=vertex,
        y=wedge.y,
        cycle=wedge.cycle,
        clover=wedge.clover,
        v1=v1,
        v2=v2,
        e1=edge_key(v1, wedge.y),
        e2=edge_key(v2, wedge.y),
        quotient={v1: vertex, v2: vertex},
    )
    logger.info("Unfolded vertex", extra={"vertex": vertex, "y": wedge.y, "v1": v1, "v2": v2})
    return unfolded, step


def unfold_all(complex_: TriangleComplex) -> tuple[TriangleComplex, list[UnfoldStep]]:
    """Unfold until no vertex link is unfoldable.

    Each pass takes the smallest unfoldable vertex. The vertex count grows by
    one per step and never exceeds the corner count, which bounds the loop.
    """
    current, steps = complex_, []
    limit = complex_.corner_count()
    while True:
        target = next((v for v in sorted(current.vertices) if find_unfoldable(link_of_vertex(current, v))), None)
        if target is None:
            break
        if len(steps) >= limit:
            raise PropertyViolation("termination", f"more than {limit} unfolding steps")
        current, step = unfold_once(current, target)
        steps.append(step)
    logger.debug("Reached unfolding fixpoint", extra={"steps": len(steps), "vertices": len(current.vertices)})
    return current, steps


def compose_quotient(steps: Sequence[UnfoldStep]) -> dict[str, str]:
    """Map from every vertex created by ``steps`` to its original vertex."""
    origin: dict[str, str] = {}
    for step in steps:
        for new, old in step.quotient.items():
            origin[new] = origin.get(old, old)
    return origin


def verify_folding_properties(
    original: TriangleComplex,
    unfolded: TriangleComplex,
    steps: Sequence[UnfoldStep],
    require_fixpoint: bool = True,
) -> FoldingReport:
    """Check what unfolding must preserve.

    Properties: ``euler_characteristic``, ``components``, ``essential``
    (essential stays essential), ``locally_cat0`` (pass stays pass),
    ``girth`` (every link is at least as long as the link it maps to),
    ``isometry`` (each triangle maps isometrically) and, with
    ``require_fixpoint``, ``fixpoint``.

    Raises:
        PropertyViolation: The first failing property, in the order above.
    """
    origin = compose_quotient(steps)
    props: dict[str, bool] = {}
    details: dict[str, str] = {}

    chi, chi_after = euler_characteristic(original), euler_characteristic(unfolded)
    props["euler_characteristic"] = chi == chi_after
    details["euler_characteristic"] = f"{chi} -> {chi_after}"

    comps, comps_after = component_count(original), component_count(unfolded)
    props["components"] = comps == comps_after
    details["components"] = f"{comps} -> {comps_after}"

    props["essential"] = not classify(original).essential or classify(unfolded).essential
    props["locally_cat0"] = not check_local_cat0(original).passed or check_local_cat0(unfolded).passed

    known = set(original.vertices)
    shorter = []
    unmapped = []
    for vertex in sorted(unfolded.vertices):
        source = origin.get(vertex, vertex)
        if source not in known:
            unmapped.append(vertex)
            continue
        before = girth(link_of_vertex(original, source))
        after = girth(link_of_vertex(unfolded, vertex))
        if after.exact is None or before.exact is None:
            if after.exact is not None:
                shorter.append(vertex)
            continue
        if compare(after.exact, before.exact, original.atom_env, original.tolerance) < 0:
            shorter.append(vertex)
    props["girth"] = not shorter and not unmapped
    if shorter:
        details["girth"] = f"shorter links at {shorter}"
    elif unmapped:
        details["girth"] = f"no original vertex for {unmapped}"

    mismatched = []
    for tri in unfolded.triangles:
        if tri.id >= len(original.triangles):
            mismatched.append(tri.id)
            continue
        source = original.triangle(tri.id)
        mapped = tuple(origin.get(v, v) for v in tri.vertices)
        if mapped != source.vertices or tri.angles != source.angles or tri.sides != source.sides:
            mismatched.append(tri.id)
    props["isometry"] = not mismatched
    if mismatched:
        details["isometry"] = f"triangles {mismatched}"

    if require_fixpoint:
        leftover = [v for v in sorted(unfolded.vertices) if find_unfoldable(link_of_vertex(unfolded, v))]
        props["fixpoint"] = not leftover
        if leftover:
            details["fixpoint"] = f"unfoldable links at {leftover}"

    report = FoldingReport(props, details)
    for name, held in props.items():
        if not held:
            raise PropertyViolation(name, details.get(name, "does not hold"))
    return report
