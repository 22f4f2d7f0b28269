"""
Intersection numbers among the arcs of a Gauss diagram.
"""

from ._arcs import ArcKind, ArcRef, interior_endpoints, s_count
from ._intersection import (
    IntersectionData,
    index,
    gamma_gamma,
    build,
    pairing,
    pairing_matrices,
    direct_pairing_oracle,
    format_matrices,
)

__all__ = [
    "ArcKind",
    "ArcRef",
    "IntersectionData",
    "interior_endpoints",
    "s_count",
    "index",
    "gamma_gamma",
    "build",
    "pairing",
    "pairing_matrices",
    "direct_pairing_oracle",
    "format_matrices",
]
