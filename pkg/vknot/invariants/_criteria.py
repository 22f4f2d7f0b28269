"""
Crossing number estimates and the eight-variant distinctness criterion.

Both only read the ``W``, ``Wbar``, ``I``, ``II`` and ``III`` attributes of
their argument, so they apply to computed invariant sets as well as to
closed-form values.
"""

from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from ..laurent import LaurentClass, LaurentPoly, class_equal

_SOURCES = ("W", "I", "II", "III")


@dataclass(frozen=True)
class BoundReport:
    """
    Lower bounds for the crossing number ``c`` and the virtual crossing
    number ``vc`` of a knot.

    Attributes
    ----------
    crossing, virtual_crossing : int
        The bounds. A value of 0 or less carries no information.

    crossing_sources, virtual_crossing_sources : tuple of str
        Names of the polynomials reaching each bound.

    degrees : dict of str to int or None
        Degree used for every polynomial, None for a vanishing one.
    """

    crossing: int
    virtual_crossing: int
    crossing_sources: Tuple[str, ...]
    virtual_crossing_sources: Tuple[str, ...]
    degrees: Dict[str, Optional[int]] = field(default_factory=dict)

    def __str__(self):
        if not self.crossing_sources:
            return "no bound: every polynomial vanishes"
        return (
            f"c >= {self.crossing} (from {', '.join(self.crossing_sources)}); "
            f"vc >= {self.virtual_crossing} "
            f"(from {', '.join(self.virtual_crossing_sources)})"
        )


def _poly_degree(p: LaurentPoly, include_reverse: bool) -> Optional[int]:
    if not p:
        return None
    if include_reverse:
        return max(p.max_degree(), -p.min_degree())
    return p.max_degree()


def _degrees(s, include_reverse: bool) -> Dict[str, Optional[int]]:
    degrees = {
        "W": _poly_degree(s.W, include_reverse),
        "I": _poly_degree(s.I, include_reverse),
        "II": _poly_degree(s.II, include_reverse),
        "III": s.III.max_degree(),
    }
    if include_reverse and degrees["III"] is not None:
        # -K and K# carry II - III instead of III
        other = LaurentClass(s.II - s.III.representative, s.III.modulus)
        if other.max_degree() is not None:
            degrees["III"] = max(degrees["III"], other.max_degree())
    return degrees


def bound_report(s, include_reverse: bool = False) -> BoundReport:
    """
    Lower bounds for ``c(K)`` and ``vc(K)`` with the polynomials reaching them.

    ``c(K) >= deg X + 1`` and ``vc(K) >= deg X`` for every non-vanishing
    ``X`` among ``W``, ``I``, ``II`` and ``III``, where the degree of ``III``
    is the largest degree reached in its class.

    Parameters
    ----------
    s : InvariantSet
        Invariants of the knot.

    include_reverse : bool, default=False
        Also use the degrees of the invariants of ``-K`` and ``K#``, which have
        the same crossing numbers. This reads ``X(t^-1)`` for ``W`` and ``I``
        and the class of ``II - III`` for ``III``.

    Returns
    -------
    BoundReport
    """
    degrees = _degrees(s, include_reverse)
    known = {name: degree for name, degree in degrees.items() if degree is not None}
    if not known:
        return BoundReport(0, 0, (), (), degrees)

    # a negative top degree, reachable through I alone, gives a vacuous bound
    top = max(known.values())
    sources = tuple(name for name in _SOURCES if known.get(name) == top)
    return BoundReport(top + 1, top, sources, sources, degrees)


def crossing_lower_bound(s, include_reverse: bool = False) -> int:
    """
    Lower bound for the crossing number, 0 when every polynomial vanishes.

    Examples
    --------
    >>> from vknot.invariants import all_invariants, crossing_lower_bound
    >>> crossing_lower_bound(all_invariants("O1-O2-O3-U4+U1-U3-O4+U2-"))
    4
    """
    return bound_report(s, include_reverse).crossing


def virtual_crossing_lower_bound(s, include_reverse: bool = False) -> int:
    """Lower bound for the virtual crossing number, 0 without information."""
    return bound_report(s, include_reverse).virtual_crossing


def span_bounds(s) -> Tuple[int, int]:
    """
    Weaker bounds read off the span of the writhe polynomial.

    Returns
    -------
    c, vc : int
        ``ceil(span W / 2) + 1`` and ``ceil(span W / 2)``, or ``(0, 0)`` when
        ``W`` vanishes.
    """
    if not s.W:
        return 0, 0
    half = -(-s.W.span() // 2)
    return half + 1, half


@dataclass(frozen=True)
class DistinctnessReport:
    """
    Verdict on whether the eight variants ``K, -K, K#, K*, -K#, -K*, K#*,
    -K#*`` are mutually distinct.

    Attributes
    ----------
    distinct : bool
        True when every condition holds.

    conditions : dict of str to bool
        Each sufficient condition and whether it holds.
    """

    distinct: bool
    conditions: Dict[str, bool]

    def __str__(self):
        lines = [
            f"{'holds' if ok else 'fails'}: {name}"
            for name, ok in self.conditions.items()
        ]
        verdict = "mutually distinct" if self.distinct else "undecided"
        return "\n".join(lines + [f"eight variants: {verdict}"])


def symmetry_distinctness(s) -> DistinctnessReport:
    """
    Check the sufficient conditions for the eight variants to be distinct.

    The conditions are

    * ``2 III`` and ``II`` lie in different classes modulo ``Wbar``,
    * ``W(t) != W(t^-1)``,
    * ``W(t) != -W(t^-1)`` or ``I(t) != I(t^-1)``.

    Parameters
    ----------
    s : InvariantSet
        Invariants of the knot.

    Returns
    -------
    DistinctnessReport
    """
    modulus = s.Wbar
    twice_third = LaurentClass(s.III.representative * 2, s.III.modulus)
    second = LaurentClass(s.II, modulus)
    W_inverse = s.W.substitute_inverse()
    conditions = {
        "2III != II (mod Wbar)": not class_equal(twice_third, second),
        "W(t) != W(1/t)": s.W != W_inverse,
        "W(t) != -W(1/t) or I(t) != I(1/t)": (
            s.W != -W_inverse or s.I != s.I.substitute_inverse()
        ),
    }
    return DistinctnessReport(all(conditions.values()), conditions)
