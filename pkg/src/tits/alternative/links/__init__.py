"""Link graphs and their structure."""

from tits.alternative.links.analysis import (
    Chain,
    CloverVerdict,
    LinkDecomposition,
    Unfoldable,
    circle_components,
    classify_clover,
    decompose,
    find_unfoldable,
    unfoldable_wedges,
)
from tits.alternative.links.graph import (
    Arc,
    Girth,
    LinkDistance,
    LinkGraph,
    LinkPoint,
    girth,
    link_distance,
    link_of_edge_point,
    link_of_vertex,
)

__all__ = [
    "Arc",
    "Chain",
    "CloverVerdict",
    "Girth",
    "LinkDecomposition",
    "LinkDistance",
    "LinkGraph",
    "LinkPoint",
    "Unfoldable",
    "circle_components",
    "classify_clover",
    "decompose",
    "find_unfoldable",
    "girth",
    "link_distance",
    "link_of_edge_point",
    "link_of_vertex",
    "unfoldable_wedges",
]
