"""Tits Alternative toolkit.

Exact link conditions, unfoldings, geodesic tracing, holonomy and
free-subgroup witnesses for finite 2-dimensional piecewise Euclidean
triangle complexes.
"""

from importlib.metadata import PackageNotFoundError, version

from tits.alternative.algebra import AngleExpr, AtomEnv, parse_angle
from tits.alternative.checks import check_extrational, check_local_cat0, check_rational, fundamental_group
from tits.alternative.complexes import TriangleComplex, dump_complex, load_complex, patches
from tits.alternative.config import AnalysisSettings, load_settings
from tits.alternative.exceptions import AnalysisError, ComplexInputError, ConfigurationError, TitsError
from tits.alternative.folding import unfold_all, unfold_once
from tits.alternative.geodesics import StartPoint, geodesic_between, trace
from tits.alternative.links import girth, link_of_vertex
from tits.alternative.witness import find_gamma, find_sheared_connections, free_subgroup_certificate

__all__ = [
    "AnalysisError",
    "AnalysisSettings",
    "AngleExpr",
    "AtomEnv",
    "ComplexInputError",
    "ConfigurationError",
    "StartPoint",
    "TitsError",
    "TriangleComplex",
    "check_extrational",
    "check_local_cat0",
    "check_rational",
    "dump_complex",
    "find_gamma",
    "find_sheared_connections",
    "free_subgroup_certificate",
    "fundamental_group",
    "geodesic_between",
    "girth",
    "link_of_vertex",
    "load_complex",
    "load_settings",
    "parse_angle",
    "patches",
    "trace",
    "unfold_all",
    "unfold_once",
]

try:
    __version__ = version("tits-alternative-toolkit")
except PackageNotFoundError:
    __version__ = "0.1.0"
