"""Straight-line tracing, developments and point-to-point geodesics."""

from tits.alternative.geodesics.development import Angle, Frame, cross_edge, principal
from tits.alternative.geodesics.local import (
    Breakpoint,
    LocalGeodesicReport,
    PiecewiseGeodesic,
    curved_breakpoints,
    is_curved,
    verify_local_geodesic,
)
from tits.alternative.geodesics.search import geodesic_between
from tits.alternative.geodesics.tracer import (
    BranchPolicy,
    Crossing,
    EdgePoint,
    EndKind,
    EndStatus,
    GeodesicPath,
    InteriorPoint,
    Leg,
    Location,
    StartPoint,
    VertexPoint,
    retrace,
    shoot_perpendicular,
    trace,
    trace_all,
)

__all__ = [
    "Angle",
    "BranchPolicy",
    "Breakpoint",
    "Crossing",
    "EdgePoint",
    "EndKind",
    "EndStatus",
    "Frame",
    "GeodesicPath",
    "InteriorPoint",
    "Leg",
    "LocalGeodesicReport",
    "Location",
    "PiecewiseGeodesic",
    "StartPoint",
    "VertexPoint",
    "cross_edge",
    "curved_breakpoints",
    "geodesic_between",
    "is_curved",
    "principal",
    "retrace",
    "shoot_perpendicular",
    "trace",
    "trace_all",
    "verify_local_geodesic",
]
