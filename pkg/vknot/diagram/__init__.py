"""
Gauss diagrams: parsing, canonical forms, symmetries and random generation.
"""

from ._gauss import (
    Sign,
    Role,
    Endpoint,
    GaussDiagram,
    parse,
    serialize,
    canonical,
    rotate,
    linked,
)
from ._symmetry import reverse, vertical_mirror, horizontal_mirror, symmetry_variants
from ._random import random_diagram

__all__ = [
    "Sign",
    "Role",
    "Endpoint",
    "GaussDiagram",
    "parse",
    "serialize",
    "canonical",
    "rotate",
    "linked",
    "reverse",
    "vertical_mirror",
    "horizontal_mirror",
    "symmetry_variants",
    "random_diagram",
]
