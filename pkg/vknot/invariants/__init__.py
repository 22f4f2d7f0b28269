"""
Writhe and intersection polynomials, crossing number bounds and symmetry
criteria.
"""

from ._polynomials import (
    InvariantSet,
    writhe,
    writhe_polynomial,
    f_polynomial,
    first_intersection,
    second_intersection,
    third_intersection,
    all_invariants,
    invariants_from_data,
)
from ._criteria import (
    BoundReport,
    DistinctnessReport,
    bound_report,
    crossing_lower_bound,
    virtual_crossing_lower_bound,
    span_bounds,
    symmetry_distinctness,
)
from ._identities import IdentityReport, symmetry_identity_check, identity_check
from ._families import (
    ClosedForm,
    antireciprocal_family,
    nonreciprocal_family,
    first_bound_family,
    second_bound_family,
)

__all__ = [
    "InvariantSet",
    "BoundReport",
    "DistinctnessReport",
    "IdentityReport",
    "ClosedForm",
    "writhe",
    "writhe_polynomial",
    "f_polynomial",
    "first_intersection",
    "second_intersection",
    "third_intersection",
    "all_invariants",
    "invariants_from_data",
    "bound_report",
    "crossing_lower_bound",
    "virtual_crossing_lower_bound",
    "span_bounds",
    "symmetry_distinctness",
    "symmetry_identity_check",
    "identity_check",
    "antireciprocal_family",
    "nonreciprocal_family",
    "first_bound_family",
    "second_bound_family",
]
