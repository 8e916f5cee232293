"""Triangle complexes: model, topology and patches."""

from tits.alternative.complexes.model import (
    Edge,
    EdgeKey,
    Triangle,
    TriangleComplex,
    dump_complex,
    edge_key,
    load_complex,
    parse_edge,
)
from tits.alternative.complexes.patches import Patch, patches
from tits.alternative.complexes.topology import (
    Classification,
    branching_locus,
    classify,
    edge_degree,
    euler_characteristic,
)

__all__ = [
    "Classification",
    "Edge",
    "EdgeKey",
    "Patch",
    "Triangle",
    "TriangleComplex",
    "branching_locus",
    "classify",
    "dump_complex",
    "edge_degree",
    "edge_key",
    "euler_characteristic",
    "load_complex",
    "parse_edge",
    "patches",
]
