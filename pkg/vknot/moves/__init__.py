"""
Reidemeister moves on Gauss diagrams and random move sequences.
"""

from ._spec import MoveKind, KinkType, R2Variant, MoveSpec
from ._moves import (
    r1_add,
    r1_remove,
    r2_add,
    r2_remove,
    r3_applicable,
    r3_apply,
    is_isolated,
    r2_removable,
)
from ._walk import applicable_moves, apply_move, random_walk, replay

__all__ = [
    "MoveKind",
    "KinkType",
    "R2Variant",
    "MoveSpec",
    "r1_add",
    "r1_remove",
    "r2_add",
    "r2_remove",
    "r3_applicable",
    "r3_apply",
    "is_isolated",
    "r2_removable",
    "applicable_moves",
    "apply_move",
    "random_walk",
    "replay",
]
