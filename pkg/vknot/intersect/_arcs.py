"""
The two arcs cut out of the knot by a chord and the endpoints they contain.

For chord ``i`` the arc ``gamma_i`` runs from the over endpoint forward to
the under endpoint, and ``gamma_bar_i`` runs from the under endpoint forward
to the over endpoint. Together they make up the whole curve.
"""

from enum import IntEnum
from typing import List, NamedTuple

import numpy as np

from ..diagram import Endpoint, GaussDiagram, Role
from ..utils._checks import check_arc, check_diagram


class ArcKind(IntEnum):
    """Which of the two arcs of a chord. The values index the pairing matrices."""

    GAMMA = 0
    GAMMA_BAR = 1

    def complement(self) -> "ArcKind":
        return ArcKind(1 - self)


class ArcRef(NamedTuple):
    """An arc of the knot, named by its chord (1-based) and its kind."""

    chord: int
    kind: ArcKind

    def __str__(self):
        prefix = "gamma" if self.kind is ArcKind.GAMMA else "gamma_bar"
        return f"{prefix}_{self.chord}"


def _bounds(d: GaussDiagram, arc: ArcRef):
    over = int(d.over_positions[arc.chord - 1])
    under = int(d.under_positions[arc.chord - 1])
    return (over, under) if arc.kind is ArcKind.GAMMA else (under, over)


def _interior_mask(d: GaussDiagram, arc: ArcRef) -> np.ndarray:
    start, stop = _bounds(d, arc)
    size = len(d.endpoints)
    offset = (np.arange(size) - start) % size
    return (offset > 0) & (offset < (stop - start) % size)


def interior_endpoints(d, arc) -> List[Endpoint]:
    """
    Endpoints strictly inside an arc, in the order the arc meets them.

    Parameters
    ----------
    d : GaussDiagram or str
        Diagram or Gauss code.

    arc : ArcRef or tuple of (int, int)
        The arc, e.g. ``(1, ArcKind.GAMMA)``.

    Returns
    -------
    list of Endpoint
        Empty when the two endpoints of the chord are adjacent on the arc.

    Examples
    --------
    >>> from vknot.intersect import interior_endpoints, ArcKind
    >>> arc = (1, ArcKind.GAMMA)
    >>> [str(e) for e in interior_endpoints("O1+U2+O3+U1+O2+U3+", arc)]
    ['U2', 'O3']
    """
    d = check_diagram(d)
    arc = check_arc(d, arc)
    start, stop = _bounds(d, arc)
    size = len(d.endpoints)
    return [
        d.endpoints[(start + offset) % size]
        for offset in range(1, (stop - start) % size)
    ]


def s_count(d, a, b) -> int:
    """
    Signed count of endpoints inside ``a`` whose partner lies inside ``b``.

    Each qualifying endpoint contributes its sign, ``-epsilon`` for an over
    endpoint and ``+epsilon`` for an under endpoint. The count is
    antisymmetric in ``a`` and ``b``.

    Parameters
    ----------
    d : GaussDiagram or str
        Diagram or Gauss code.

    a, b : ArcRef or tuple of (int, int)
        Arcs of two different chords.

    Returns
    -------
    int

    Raises
    ------
    ValueError
        If both arcs belong to the same chord.
    """
    d = check_diagram(d)
    a, b = check_arc(d, a), check_arc(d, b)
    if a.chord == b.chord:
        msg = f"Arcs {a} and {b} belong to the same chord."
        raise ValueError(msg)

    inside_a, inside_b = _interior_mask(d, a), _interior_mask(d, b)
    qualifying = inside_a & inside_b[d.partners]
    return int(d.endpoint_signs[qualifying].sum())


def _contains(d: GaussDiagram, arc: ArcRef, chord: int, role: Role) -> bool:
    positions = d.over_positions if role is Role.OVER else d.under_positions
    return bool(_interior_mask(d, arc)[positions[chord - 1]])
