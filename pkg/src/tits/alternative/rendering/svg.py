"""SVG pictures of links, traced geodesics and patch developments.

Presentation only: nothing in the analysis reads these files back.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from pathlib import Path
from typing import Any

import networkx as nx
import numpy as np
from jinja2 import Environment, FileSystemLoader, StrictUndefined, select_autoescape

from tits.alternative.complexes import Patch, TriangleComplex
from tits.alternative.geodesics import Frame, GeodesicPath
from tits.alternative.geodesics.development import cross_edge
from tits.alternative.links import LinkGraph

logger = logging.getLogger(__name__)

_TEMPLATES_DIR = Path(__file__).parent / "templates"

SCALE = 120.0
MARGIN = 30.0


def _make_env() -> Environment:
    return Environment(
        loader=FileSystemLoader(str(_TEMPLATES_DIR)),
        undefined=StrictUndefined,
        keep_trailing_newline=True,
        autoescape=select_autoescape(enabled_extensions=("j2",), default=True),
        trim_blocks=True,
        lstrip_blocks=True,
    )


def _fmt(value: float) -> str:
    return f"{value:.3f}"


def _screen(points: np.ndarray) -> np.ndarray:
    """Scale to pixels and flip the y axis."""
    return np.asarray(points, dtype=float).reshape(-1, 2) * np.array([SCALE, -SCALE])


def _view(points: np.ndarray) -> dict[str, str]:
    low, high = points.min(axis=0) - MARGIN, points.max(axis=0) + MARGIN
    return {"x": _fmt(low[0]), "y": _fmt(low[1]), "width": _fmt(high[0] - low[0]), "height": _fmt(high[1] - low[1])}


def _pair(point: np.ndarray) -> tuple[str, str]:
    return _fmt(float(point[0])), _fmt(float(point[1]))


def _render(template: str, title: str, everything: np.ndarray, **context: Any) -> str:
    return _make_env().get_template(template).render(title=title, view=_view(everything), **context)


def render_link(link: LinkGraph) -> str:
    """Nodes on a circle, one curved stroke per arc labelled with its exact length."""
    layout = nx.circular_layout(sorted(link.nodes)) if link.nodes else {}
    at = {node: _screen(position)[0] * 1.5 for node, position in layout.items()}
    arcs = []
    seen: dict[frozenset[str], int] = {}
    for arc in link.arcs:
        pair = frozenset((arc.u, arc.v))
        rank = seen.get(pair, 0)
        seen[pair] = rank + 1
        start, end = at[arc.u], at[arc.v]
        middle = (start + end) / 2
        normal = np.array([start[1] - end[1], end[0] - start[0]])
        norm = float(np.linalg.norm(normal)) or 1.0
        bend = (rank + 1) // 2 * (1 if rank % 2 else -1) * 40.0
        control = middle + normal / norm * bend
        label = (middle + control) / 2
        arcs.append(
            {"start": _pair(start), "end": _pair(end), "control": _pair(control), "label": _pair(label), "text": str(arc.length)}
        )
    nodes = [{"name": name, "at": _pair(point), "label": _fmt(float(point[1]) - 8)} for name, point in sorted(at.items())]
    points = np.array(list(at.values())) if at else np.zeros((1, 2))
    logger.debug("Rendering link", extra={"center": link.center, "arcs": len(arcs)})
    return _render("link.svg.j2", f"Link at {link.center}", points, arcs=arcs, nodes=nodes)


def _triangles(complex_: TriangleComplex, frames: Sequence[Frame]) -> tuple[list[dict[str, Any]], list[np.ndarray]]:
    drawn, corners = [], []
    for frame in frames:
        screen = _screen(frame.corners(complex_))
        corners.append(screen)
        drawn.append({"id": frame.triangle, "corners": [_pair(p) for p in screen], "center": _pair(screen.mean(axis=0))})
    return drawn, corners


def render_trace(complex_: TriangleComplex, path: GeodesicPath) -> str:
    """The developed strip of a traced path with the path drawn straight across it."""
    triangles, corners = _triangles(complex_, [leg.frame for leg in path.legs])
    line = _screen(path.development)
    everything = np.vstack([*corners, line])
    return _render(
        "development.svg.j2",
        f"Geodesic of length {path.length:.6g}",
        everything,
        triangles=triangles,
        path=[_pair(p) for p in line],
    )


def develop_patch(complex_: TriangleComplex, patch: Patch) -> list[Frame]:
    """Frames of the patch triangles along a breadth-first tree of the dual graph."""
    root = patch.triangles[0]
    frames = {root: Frame(root)}
    dual = patch.dual_graph(complex_)
    for u, v in nx.bfs_edges(dual, root, sort_neighbors=sorted):
        a, b = dual.edges[u, v]["edge"]
        frames[v] = cross_edge(complex_, frames[u], a, b, v)
    return [frames[t] for t in patch.triangles if t in frames]


def render_patch(complex_: TriangleComplex, patch: Patch) -> str:
    """One development of a patch, cut open along the dual edges off the tree."""
    triangles, corners = _triangles(complex_, develop_patch(complex_, patch))
    everything = np.vstack(corners) if corners else np.zeros((1, 2))
    return _render("development.svg.j2", f"Patch {patch.id}", everything, triangles=triangles, path=[])


def write_svg(text: str, destination: Path) -> Path:
    """Write ``text`` to ``destination``, creating parent directories."""
    destination.parent.mkdir(parents=True, exist_ok=True)
    destination.write_text(text, encoding="utf-8", newline="\n")
    logger.info("Wrote SVG", extra={"path": str(destination), "bytes": len(text)})
    return destination
