"""
Exact integral Laurent polynomials and their residue classes.
"""

from ._poly import (
    LaurentPoly,
    add,
    scale,
    monomial_minus_one,
    substitute_inverse,
    max_degree,
    min_degree,
    span,
    is_reciprocal,
)
from ._class import (
    LaurentClass,
    class_equal,
    canonical_representative,
    class_max_degree,
)

__all__ = [
    "LaurentPoly",
    "LaurentClass",
    "add",
    "scale",
    "monomial_minus_one",
    "substitute_inverse",
    "max_degree",
    "min_degree",
    "span",
    "is_reciprocal",
    "class_equal",
    "canonical_representative",
    "class_max_degree",
]
