"""
Identities every diagram satisfies, checked on demand.

They serve as acceptance tests for the intersection numbers: a wrong
intersection formula breaks at least one of them on random diagrams.
"""

from dataclasses import dataclass
from typing import Dict, List

import numpy as np

from ..diagram import reverse, vertical_mirror, horizontal_mirror
from ..intersect import build, pairing_matrices
from ..laurent import LaurentClass, class_equal
from ..utils import check_diagram
from ._polynomials import all_invariants, invariants_from_data


@dataclass(frozen=True)
class IdentityReport:
    """
    Outcome of an identity check.

    Attributes
    ----------
    results : dict of str to bool
        Each identity, written out, and whether it holds.
    """

    results: Dict[str, bool]

    @property
    def holds(self) -> bool:
        return all(self.results.values())

    def failures(self) -> List[str]:
        return [name for name, ok in self.results.items() if not ok]

    def __bool__(self):
        return self.holds

    def __str__(self):
        return "\n".join(
            f"{'ok  ' if ok else 'FAIL'} {name}" for name, ok in self.results.items()
        )


def symmetry_identity_check(d) -> IdentityReport:
    """
    Compare the invariants of ``d`` with those of ``-D``, ``D#`` and ``D*``.

    Checked identities::

        W(-K) = W(t^-1)           W(K#) = W(K*) = -W(t^-1)
        I(-K) = I(K#) = I(K*) = I(t^-1)
        II(-K) = II(K#) = II(K*) = II
        III(-K) = III(K#) = II - III      III(K*) = III

    The classes of ``III`` are compared with :func:`~vknot.laurent.class_equal`;
    the modulus of ``D#`` and ``D*`` is ``-Wbar``.

    Parameters
    ----------
    d : GaussDiagram or str
        Diagram or Gauss code.

    Returns
    -------
    IdentityReport
    """
    d = check_diagram(d)
    base = all_invariants(d)
    rev = all_invariants(reverse(d))
    sharp = all_invariants(vertical_mirror(d))
    star = all_invariants(horizontal_mirror(d))

    W_inverse = base.W.substitute_inverse()
    I_inverse = base.I.substitute_inverse()
    complement = LaurentClass(base.II - base.III.representative, base.Wbar)
    return IdentityReport(
        {
            "W(-K) = W(1/t)": rev.W == W_inverse,
            "W(K#) = -W(1/t)": sharp.W == -W_inverse,
            "W(K*) = -W(1/t)": star.W == -W_inverse,
            "I(-K) = I(1/t)": rev.I == I_inverse,
            "I(K#) = I(1/t)": sharp.I == I_inverse,
            "I(K*) = I(1/t)": star.I == I_inverse,
            "II(-K) = II": rev.II == base.II,
            "II(K#) = II": sharp.II == base.II,
            "II(K*) = II": star.II == base.II,
            "III(-K) = II - III": class_equal(rev.III, complement),
            "III(K#) = II - III": class_equal(sharp.III, complement),
            "III(K*) = III": class_equal(star.III, base.III),
        }
    )


def identity_check(d) -> IdentityReport:
    """
    Check the identities relating the invariants of a single diagram.

    Checked identities:

    * ``f10(D) = f01(D#)`` and ``f11(D) = f00(D#)``,
    * ``f10 - w W(t^-1) = I(t^-1)``,
    * ``f11 = II - III`` modulo ``Wbar``,
    * ``Wbar = W(t) + W(t^-1)``,
    * ``f00``, ``f11``, ``Wbar`` and ``II`` are reciprocal,
    * ``deg f_pq <= n - 1`` when ``n >= 2``,
    * the pairing matrices are antisymmetric and satisfy
      ``gamma_D . gamma_j = -n_j`` and ``gamma_D . gamma_bar_j = n_j``.

    Parameters
    ----------
    d : GaussDiagram or str
        Diagram or Gauss code.

    Returns
    -------
    IdentityReport
    """
    d = check_diagram(d)
    data = build(d)
    s = invariants_from_data(data, d.signs)
    sharp = all_invariants(vertical_mirror(d))
    matrices = pairing_matrices(data)
    rows = np.broadcast_to(data.index, data.A.shape)

    f_degrees = [f.max_degree() for f in (s.f01, s.f10, s.f00, s.f11)]
    degree_ok = d.n < 2 or all(k is None or k <= d.n - 1 for k in f_degrees)

    return IdentityReport(
        {
            "f10(D) = f01(D#)": s.f10 == sharp.f01,
            "f11(D) = f00(D#)": s.f11 == sharp.f00,
            "f10 - wW(1/t) = I(1/t)": (
                s.f10 - s.W.substitute_inverse() * s.writhe
                == s.I.substitute_inverse()
            ),
            "f11 = II - III (mod Wbar)": class_equal(
                LaurentClass(s.f11, s.Wbar),
                LaurentClass(s.II - s.III.representative, s.Wbar),
            ),
            "Wbar = W + W(1/t)": s.Wbar == s.W + s.W.substitute_inverse(),
            "f00 reciprocal": s.f00.is_reciprocal(),
            "f11 reciprocal": s.f11.is_reciprocal(),
            "Wbar reciprocal": s.Wbar.is_reciprocal(),
            "II reciprocal": s.II.is_reciprocal(),
            "deg f_pq <= n - 1": degree_ok,
            "gamma.gamma antisymmetric": np.array_equal(data.A, -data.A.T),
            "gamma_bar.gamma_bar antisymmetric": np.array_equal(
                matrices[1, 1], -matrices[1, 1].T
            ),
            "gamma_D.gamma_j = -n_j": np.array_equal(
                matrices[0, 0] + matrices[1, 0], -rows
            ),
            "gamma_D.gamma_bar_j = n_j": np.array_equal(
                matrices[0, 1] + matrices[1, 1], rows
            ),
        }
    )
