"""Structure of link graphs: chains, clovers and unfoldable wedges."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from typing import Optional

import networkx as nx

from tits.alternative.algebra import PI, TWO_PI, AngleExpr
from tits.alternative.links.graph import LinkGraph

CYCLE = "cycle"
SEGMENT = "segment"
HAIR = "hair"


@dataclass(frozen=True)
class Chain:
    """A maximal path through degree-2 nodes, or an isolated cycle."""

    kind: str
    start: str
    end: str
    nodes: tuple[str, ...]
    arcs: tuple[int, ...]
    length: AngleExpr

    def to_dict(self) -> dict:
        """Report form."""
        return {"kind": self.kind, "ends": [self.start, self.end], "arcs": list(self.arcs), "length": self.length}


@dataclass(frozen=True)
class LinkDecomposition:
    """Cycles, segments and hairs of a link."""

    cycles: tuple[Chain, ...]
    segments: tuple[Chain, ...]
    hairs: tuple[Chain, ...] = ()

    @property
    def chains(self) -> tuple[Chain, ...]:
        """Everything, cycles first."""
        return self.cycles + self.segments + self.hairs


@dataclass(frozen=True)
class CloverVerdict:
    """Result of :func:`classify_clover`."""

    is_clover: bool
    basepoint: Optional[str] = None
    tips: dict[str, int] = field(default_factory=dict)

    @property
    def strands(self) -> int:
        """Number of length-π strands."""
        return sum(self.tips.values())


@dataclass(frozen=True)
class Unfoldable:
    """A wedge of a 2π cycle and a clover at node ``y``."""

    y: str
    cycle: tuple[int, ...]
    clover: tuple[int, ...]


def _walk_chains(link: LinkGraph, stops: Iterable[str] = ()) -> tuple[list[Chain], set[int]]:
    """Chains starting and ending at special nodes; returns chains and visited arcs."""
    special = {n for n in link.nodes if link.degree(n) != 2} | set(stops)
    visited: set[int] = set()
    chains = []
    for start in sorted(special):
        for first in link.incident(start):
            if first.key in visited:
                continue
            nodes, arcs, length = [start], [first.key], first.length
            visited.add(first.key)
            current, previous = first.other(start), first.key
            while current not in special:
                nodes.append(current)
                (step,) = [a for a in link.incident(current) if a.key != previous]
                visited.add(step.key)
                arcs.append(step.key)
                length = length + step.length
                current, previous = step.other(current), step.key
            nodes.append(current)
            kind = SEGMENT if link.degree(start) >= 3 and link.degree(current) >= 3 else HAIR
            chains.append(Chain(kind, start, current, tuple(nodes), tuple(arcs), length))
    return chains, visited


def decompose(link: LinkGraph) -> LinkDecomposition:
    """Split a link into isolated cycles, segments and hairs.

    Degree-2 nodes are suppressed. Segments join nodes of degree at least 3
    (possibly the same node); hairs touch a degree-1 node.
    """
    chains, visited = _walk_chains(link)
    cycles = []
    for arc in link.arcs:
        if arc.key in visited:
            continue
        nodes, arcs, length = [arc.u], [arc.key], arc.length
        visited.add(arc.key)
        current, previous = arc.v, arc.key
        while current != arc.u:
            nodes.append(current)
            (step,) = [a for a in link.incident(current) if a.key != previous]
            visited.add(step.key)
            arcs.append(step.key)
            length = length + step.length
            current, previous = step.other(current), step.key
        cycles.append(Chain(CYCLE, arc.u, arc.u, tuple(nodes + [arc.u]), tuple(arcs), length))
    return LinkDecomposition(
        cycles=tuple(cycles),
        segments=tuple(c for c in chains if c.kind == SEGMENT),
        hairs=tuple(c for c in chains if c.kind == HAIR),
    )


def circle_components(link: LinkGraph) -> list[Chain]:
    """Components of the link that are circles."""
    return list(decompose(link).cycles)


def _clover_at(link: LinkGraph, base: str) -> CloverVerdict:
    chains, visited = _walk_chains(link, stops=[base])
    if not chains or len(visited) != len(link.arcs):
        return CloverVerdict(False)
    tips: dict[str, int] = {}
    for chain in chains:
        if chain.start == base and chain.end == base:
            if chain.length != TWO_PI:
                return CloverVerdict(False)
            midpoint = f"mid:{chain.arcs[0]}"
            tips[midpoint] = tips.get(midpoint, 0) + 2
        elif base in (chain.start, chain.end):
            if chain.length != PI:
                return CloverVerdict(False)
            tip = chain.end if chain.start == base else chain.start
            tips[tip] = tips.get(tip, 0) + 1
        else:
            return CloverVerdict(False)
    if any(count < 2 for count in tips.values()):
        return CloverVerdict(False)
    return CloverVerdict(True, base, dict(sorted(tips.items())))


def classify_clover(link: LinkGraph, basepoint: Optional[str] = None) -> CloverVerdict:
    """Decide whether the link is a clover.

    A clover is a union of length-π strands from a basepoint whose far ends
    (tips) are identified in classes of size at least 2. A chain leaving and
    re-entering the basepoint with length 2π counts as two strands meeting at
    its midpoint. With ``basepoint`` given only that node is tried; otherwise
    nodes are tried in sorted order.
    """
    if not link.arcs:
        return CloverVerdict(False)
    candidates = [basepoint] if basepoint is not None else link.nodes
    for base in candidates:
        verdict = _clover_at(link, base)
        if verdict.is_clover:
            return verdict
    return CloverVerdict(False)


def unfoldable_wedges(link: LinkGraph) -> Iterator[Unfoldable]:
    """Every way of splitting the link at a node ``y`` into a 2π cycle and a clover based at ``y``.

    Yields in tie-break order: smaller ``y`` first, then the lexicographically
    smaller cycle (sorted arc keys).
    """
    simple = nx.Graph(link.graph)
    for y in sorted(nx.articulation_points(simple)):
        rest = simple.copy()
        rest.remove_node(y)
        lobes = []
        for component in nx.connected_components(rest):
            members = set(component) | {y}
            keys = tuple(sorted(a.key for a in link.arcs if a.u in members and a.v in members))
            lobes.append(keys)
        lobes.sort()
        for keys in lobes:
            lobe = link.restricted(keys)
            if any(lobe.degree(n) != 2 for n in lobe.nodes) or lobe.total_length() != TWO_PI:
                continue
            others = tuple(sorted(k for other in lobes if other != keys for k in other))
            if not others:
                continue
            if classify_clover(link.restricted(others), basepoint=y).is_clover:
                yield Unfoldable(y, keys, others)


def find_unfoldable(link: LinkGraph) -> Optional[Unfoldable]:
    """The first wedge in tie-break order, or ``None``."""
    return next(unfoldable_wedges(link), None)


def segment_lengths(link: LinkGraph) -> list[AngleExpr]:
    """Lengths of every cycle and segment."""
    parts = decompose(link)
    return [c.length for c in parts.cycles + parts.segments]
