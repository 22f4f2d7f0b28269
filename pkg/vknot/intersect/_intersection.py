"""
Intersection numbers of the arcs of a Gauss diagram.

All pairings between the cycles ``gamma_i`` and ``gamma_bar_j`` follow by
linearity from the index vector ``n_i = gamma_i . gamma_bar_i`` and the
antisymmetric matrix ``A[i, j] = gamma_i . gamma_j``, using
``gamma_i + gamma_bar_i = gamma_D`` and ``gamma_i . gamma_D = n_i``.
"""

from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np
import pandas as pd

from ..diagram import GaussDiagram, Role
from ..utils._checks import check_arc, check_diagram
from ._arcs import ArcKind, ArcRef, _contains, s_count


def _frozen(array):
    array = np.array(array, dtype=int)
    array.flags.writeable = False
    return array


@dataclass(frozen=True, eq=False)
class IntersectionData:
    """
    Index vector and ``gamma . gamma`` matrix of a diagram.

    Parameters
    ----------
    index : ndarray of shape (n,)
        ``index[i - 1]`` is the index ``n_i`` of chord ``i``.

    A : ndarray of shape (n, n)
        ``A[i - 1, j - 1]`` is ``gamma_i . gamma_j``. Antisymmetric with a
        zero diagonal.
    """

    index: np.ndarray
    A: np.ndarray

    def __post_init__(self):
        index = np.asarray(self.index, dtype=int).reshape(-1)
        A = np.asarray(self.A, dtype=int).reshape(index.size, index.size)
        object.__setattr__(self, "index", _frozen(index))
        object.__setattr__(self, "A", _frozen(A))

    @classmethod
    def from_matrices(cls, index, A) -> "IntersectionData":
        """
        Build the data from tabulated values, checking their consistency.

        Raises
        ------
        ValueError
            If the shapes disagree or ``A`` is not antisymmetric with a zero
            diagonal.
        """
        index = np.asarray(index, dtype=int)
        A = np.asarray(A, dtype=int)
        if index.ndim != 1 or A.shape != (index.size, index.size):
            msg = (
                f"Expected an index vector of shape (n,) and a matrix of shape "
                f"(n, n), got {index.shape} and {A.shape}."
            )
            raise ValueError(msg)
        if not np.array_equal(A, -A.T):
            raise ValueError("The gamma.gamma matrix must be antisymmetric.")
        return cls(index, A)

    @property
    def n(self) -> int:
        return int(self.index.size)

    def __eq__(self, other):
        if not isinstance(other, IntersectionData):
            return NotImplemented
        return np.array_equal(self.index, other.index) and np.array_equal(
            self.A, other.A
        )


def _interior_matrix(d: GaussDiagram) -> np.ndarray:
    # inside[c, x] is True when position x is interior to gamma_{c+1}
    size = len(d.endpoints)
    start = d.over_positions[:, None]
    length = (d.under_positions - d.over_positions)[:, None] % size
    offset = (np.arange(size)[None, :] - start) % size
    return (offset > 0) & (offset < length)


def _linking_orientation(d: GaussDiagram, inside: np.ndarray) -> np.ndarray:
    # +1 when the under endpoint of j lies inside gamma_i, -1 when its over
    # endpoint does, 0 for unlinked chords
    return inside[:, d.under_positions].astype(int) - inside[
        :, d.over_positions
    ].astype(int)


def build(d) -> IntersectionData:
    """
    Compute the index vector and the ``gamma . gamma`` matrix of a diagram.

    Parameters
    ----------
    d : GaussDiagram or str
        Diagram or Gauss code.

    Returns
    -------
    IntersectionData

    Examples
    --------
    >>> from vknot.intersect import build
    >>> build("O1-O2-O3-U4+U1-U3-O4+U2-").index.tolist()
    [3, -1, 0, 2]
    """
    d = check_diagram(d)
    if not d.n:
        return IntersectionData(np.zeros(0, dtype=int), np.zeros((0, 0), dtype=int))

    inside = _interior_matrix(d)
    indices = inside.astype(int) @ d.endpoint_signs

    signs = np.array(d.signs, dtype=int)
    weighted = inside * d.endpoint_signs[None, :]
    s_matrix = weighted @ inside[:, d.partners].T.astype(int)
    half_sum = (signs[:, None] + signs[None, :]) // 2
    A = s_matrix + _linking_orientation(d, inside) * half_sum
    np.fill_diagonal(A, 0)
    return IntersectionData(indices, A)


def index(d, i: int) -> int:
    """
    Index ``n_i = gamma_i . gamma_bar_i`` of chord ``i``.

    This is the sum of the endpoint signs inside ``gamma_i``.
    """
    d = check_diagram(d)
    arc = check_arc(d, (i, ArcKind.GAMMA))
    inside = _interior_matrix(d)[arc.chord - 1]
    return int(d.endpoint_signs[inside].sum())


def gamma_gamma(d, i: int, j: int) -> int:
    """
    Intersection number ``gamma_i . gamma_j``.

    For unlinked chords it equals ``S(gamma_i, gamma_j)``. Linked chords get
    the correction ``sigma * (epsilon_i + epsilon_j) / 2`` where ``sigma`` is
    ``+1`` when the under endpoint of chord ``j`` lies inside ``gamma_i`` and
    ``-1`` when its over endpoint does.
    """
    d = check_diagram(d)
    a = check_arc(d, (i, ArcKind.GAMMA))
    b = check_arc(d, (j, ArcKind.GAMMA))
    if a.chord == b.chord:
        return 0

    sigma = int(_contains(d, a, b.chord, Role.UNDER)) - int(
        _contains(d, a, b.chord, Role.OVER)
    )
    half_sum = (int(d.sign(a.chord)) + int(d.sign(b.chord))) // 2
    return s_count(d, a, b) + sigma * half_sum


def pairing_matrices(data: IntersectionData) -> Dict[Tuple[int, int], np.ndarray]:
    """
    All four pairing matrices of a diagram.

    Returns
    -------
    dict
        Maps ``(p, q)`` to the matrix of ``x_i . y_j`` where ``x`` is
        ``gamma`` for ``p = 0`` and ``gamma_bar`` for ``p = 1``, and likewise
        ``y`` for ``q``.
    """
    n_row = data.index[:, None]
    n_col = data.index[None, :]
    A = data.A
    return {
        (0, 0): A,
        (0, 1): n_row - A,
        (1, 0): -n_col - A,
        (1, 1): n_col - n_row + A,
    }


def pairing(data: IntersectionData, a, b) -> int:
    """
    Intersection number of two arcs, possibly of the same chord.

    Parameters
    ----------
    data : IntersectionData
        Output of :func:`build` or :meth:`IntersectionData.from_matrices`.

    a, b : ArcRef or tuple of (int, int)
        The two arcs.

    Returns
    -------
    int
    """
    a, b = ArcRef(int(a[0]), ArcKind(a[1])), ArcRef(int(b[0]), ArcKind(b[1]))
    for arc in (a, b):
        if not 1 <= arc.chord <= data.n:
            msg = f"Chord {arc.chord} is outside 1..{data.n}."
            raise ValueError(msg)

    i, j = a.chord - 1, b.chord - 1
    n_i, n_j, a_ij = int(data.index[i]), int(data.index[j]), int(data.A[i, j])
    if a.kind is ArcKind.GAMMA and b.kind is ArcKind.GAMMA:
        return a_ij
    if a.kind is ArcKind.GAMMA:
        return n_i - a_ij
    if b.kind is ArcKind.GAMMA:
        return -n_j - a_ij
    return n_j - n_i + a_ij


def direct_pairing_oracle(d, a, b) -> int:
    """
    Intersection number of arcs of two different chords, computed directly.

    The result is ``S(a, b)`` plus one corner term per chord. The chord of
    ``a`` contributes when its endpoints straddle ``b`` and the chord of
    ``b`` contributes when its endpoints straddle ``a``; each term is
    ``-1``, ``0`` or ``+1`` depending on the arc kinds and the chord sign.
    This does not go through the index vector or the ``A`` matrix and is
    meant as an independent check of :func:`pairing`.

    Raises
    ------
    ValueError
        If both arcs belong to the same chord.
    """
    d = check_diagram(d)
    a, b = check_arc(d, a), check_arc(d, b)
    s_ab = s_count(d, a, b)

    epsilon_a, epsilon_b = int(d.sign(a.chord)), int(d.sign(b.chord))
    if a.kind is ArcKind.GAMMA:
        kappa = (1 + epsilon_a) // 2
    else:
        kappa = -((1 - epsilon_a) // 2)
    if b.kind is ArcKind.GAMMA:
        lam = (1 - epsilon_b) // 2
    else:
        lam = -((1 + epsilon_b) // 2)

    straddle_a = int(_contains(d, b, a.chord, Role.OVER)) - int(
        _contains(d, b, a.chord, Role.UNDER)
    )
    straddle_b = int(_contains(d, a, b.chord, Role.OVER)) - int(
        _contains(d, a, b.chord, Role.UNDER)
    )
    return s_ab + kappa * straddle_a + lam * straddle_b


_TABLES = [
    ((0, 1), "gamma.gamma_bar", "g", "gb"),
    ((0, 0), "gamma.gamma", "g", "g"),
    ((1, 1), "gamma_bar.gamma_bar", "gb", "gb"),
]


def format_matrices(data: IntersectionData) -> str:
    """
    Render the ``gamma . gamma_bar``, ``gamma . gamma`` and
    ``gamma_bar . gamma_bar`` tables as aligned integer grids.

    Rows and columns follow the chord labels.
    """
    matrices = pairing_matrices(data)
    labels = range(1, data.n + 1)
    blocks = []
    for key, title, row, column in _TABLES:
        frame = pd.DataFrame(
            matrices[key],
            index=[f"{row}{k}" for k in labels],
            columns=[f"{column}{k}" for k in labels],
        )
        blocks.append(f"{title}\n{frame.to_string()}")
    return "\n\n".join(blocks)
