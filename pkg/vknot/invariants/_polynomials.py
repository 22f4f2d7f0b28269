"""
Writhe polynomial, the four f polynomials and the intersection polynomials.

For a diagram with chords of signs ``epsilon_i``::

    W    = sum_i epsilon_i (t^{n_i} - 1)
    f_pq = sum_{i, j} epsilon_i epsilon_j (t^{x_i . y_j} - 1)
    I    = f_01 - w W
    II   = f_00 + f_11 - w Wbar
    III  = f_00 modulo integer multiples of Wbar

where ``w`` is the writhe, ``Wbar = W(t) + W(t^-1)`` and ``x``, ``y`` are
``gamma`` for index 0 and ``gamma_bar`` for index 1. The double sums run over
all ordered pairs, diagonal included.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..laurent import LaurentClass, LaurentPoly
from ..intersect import IntersectionData, build, pairing_matrices
from ..utils import check_diagram
from ._criteria import bound_report, symmetry_distinctness


@dataclass(frozen=True)
class InvariantSet:
    """
    Invariants of one diagram.

    Attributes
    ----------
    writhe : int
        Sum of the crossing signs.

    W, Wbar : LaurentPoly
        Writhe polynomial and its symmetrization ``W(t) + W(t^-1)``.

    f01, f10, f00, f11 : LaurentPoly
        The four double sums over pairs of arcs.

    I, II : LaurentPoly
        First and second intersection polynomials.

    III : LaurentClass
        Third intersection polynomial, the class of ``f00`` modulo ``Wbar``.
    """

    writhe: int
    W: LaurentPoly
    Wbar: LaurentPoly
    f01: LaurentPoly
    f10: LaurentPoly
    f00: LaurentPoly
    f11: LaurentPoly
    I: LaurentPoly  # noqa: E741
    II: LaurentPoly
    III: LaurentClass

    def to_record(self, name: Optional[str] = None, code: Optional[str] = None):
        """
        Flat JSON-compatible record.

        Polynomials use the canonical text form. ``III`` is split into its
        canonical representative and its modulus.
        """
        bounds = bound_report(self)
        return {
            "name": name,
            "gauss_code": code,
            "writhe": self.writhe,
            "W": str(self.W),
            "Wbar": str(self.Wbar),
            "f01": str(self.f01),
            "f10": str(self.f10),
            "f00": str(self.f00),
            "f11": str(self.f11),
            "I": str(self.I),
            "II": str(self.II),
            "III_representative": str(self.III.canonical()),
            "III_modulus": str(self.III.modulus),
            "c_lower_bound": bounds.crossing,
            "vc_lower_bound": bounds.virtual_crossing,
            "symmetry_distinct": symmetry_distinctness(self).distinct,
        }


def _weighted_sum(exponents, weights) -> LaurentPoly:
    # sum of w * (t^e - 1) over matching entries
    exponents = np.asarray(exponents, dtype=int).ravel()
    weights = np.asarray(weights, dtype=int).ravel()
    if not exponents.size:
        return LaurentPoly()
    unique, inverse = np.unique(exponents, return_inverse=True)
    totals = np.zeros(unique.size, dtype=int)
    np.add.at(totals, inverse.ravel(), weights)
    terms = {int(e): int(c) for e, c in zip(unique, totals)}
    return LaurentPoly(terms) - int(weights.sum())


def _check_signs(data: IntersectionData, signs) -> np.ndarray:
    signs = np.asarray([int(s) for s in signs], dtype=int)
    if signs.shape != (data.n,) or not np.isin(signs, (-1, 1)).all():
        msg = f"Expected {data.n} signs in {{-1, +1}}, got {signs.tolist()}."
        raise ValueError(msg)
    return signs


def _f_from_data(data: IntersectionData, signs: np.ndarray, p: int, q: int):
    return _weighted_sum(pairing_matrices(data)[p, q], np.outer(signs, signs))


def _check_arc_kind(value, name):
    if value not in (0, 1):
        msg = f"`{name}` must be 0 (gamma) or 1 (gamma_bar), got {value!r}."
        raise ValueError(msg)
    return int(value)


def writhe(d) -> int:
    """Sum of the crossing signs of a diagram."""
    return check_diagram(d).writhe()


def writhe_polynomial(d) -> LaurentPoly:
    """
    Writhe polynomial ``sum_i epsilon_i (t^{n_i} - 1)``.

    Examples
    --------
    >>> from vknot.invariants import writhe_polynomial
    >>> str(writhe_polynomial("O1-O2-O3-U4+U1-U3-O4+U2-"))
    '-t^3+t^2+1-t^-1'
    """
    d = check_diagram(d)
    data = build(d)
    return _weighted_sum(data.index, np.asarray(d.signs, dtype=int))


def f_polynomial(d, p: int, q: int) -> LaurentPoly:
    """
    Double sum ``sum_{i, j} epsilon_i epsilon_j (t^{x_i . y_j} - 1)``.

    Parameters
    ----------
    d : GaussDiagram or str
        Diagram or Gauss code.

    p, q : {0, 1}
        Kind of the first and of the second arc, 0 for ``gamma`` and 1 for
        ``gamma_bar``.

    Returns
    -------
    LaurentPoly
    """
    d = check_diagram(d)
    p, q = _check_arc_kind(p, "p"), _check_arc_kind(q, "q")
    return _f_from_data(build(d), np.asarray(d.signs, dtype=int), p, q)


def first_intersection(d) -> LaurentPoly:
    """First intersection polynomial ``I = f01 - w W``."""
    return all_invariants(d).I


def second_intersection(d) -> LaurentPoly:
    """Second intersection polynomial ``II = f00 + f11 - w Wbar``."""
    return all_invariants(d).II


def third_intersection(d) -> LaurentClass:
    """Third intersection polynomial, the class of ``f00`` modulo ``Wbar``."""
    return all_invariants(d).III


def invariants_from_data(data: IntersectionData, signs) -> InvariantSet:
    """
    Compute every invariant from intersection data and crossing signs.

    This is the route taken by :func:`all_invariants`. It also accepts
    tabulated data built with :meth:`IntersectionData.from_matrices`.

    Parameters
    ----------
    data : IntersectionData
        Index vector and ``gamma . gamma`` matrix.

    signs : sequence of int
        ``signs[i - 1]`` is the sign of chord ``i``.

    Returns
    -------
    InvariantSet
    """
    signs = _check_signs(data, signs)
    omega = int(signs.sum())
    W = _weighted_sum(data.index, signs)
    Wbar = W + W.substitute_inverse()
    f = {
        (p, q): _f_from_data(data, signs, p, q) for p in (0, 1) for q in (0, 1)
    }
    return InvariantSet(
        writhe=omega,
        W=W,
        Wbar=Wbar,
        f01=f[0, 1],
        f10=f[1, 0],
        f00=f[0, 0],
        f11=f[1, 1],
        I=f[0, 1] - W * omega,
        II=f[0, 0] + f[1, 1] - Wbar * omega,
        III=LaurentClass(f[0, 0], Wbar),
    )


def all_invariants(d) -> InvariantSet:
    """
    Compute every invariant of a diagram from a single intersection build.

    Parameters
    ----------
    d : GaussDiagram or str
        Diagram or Gauss code.

    Returns
    -------
    InvariantSet
    """
    d = check_diagram(d)
    return invariants_from_data(build(d), d.signs)
