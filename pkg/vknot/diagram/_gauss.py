"""
Gauss diagrams of virtual knot diagrams.

A Gauss diagram with ``n`` chords is stored as the cyclic sequence of its
``2n`` chord endpoints read from a basepoint, together with the sign of every
chord. Each chord runs from its over endpoint to its under endpoint.
"""

import re
from enum import Enum, IntEnum
from functools import cached_property
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Tuple

import numpy as np

from ..exceptions import GaussCodeError

_TOKEN = re.compile(r"([OU])(\d+)([+\-])", re.IGNORECASE)


class Sign(IntEnum):
    """Sign of a crossing."""

    POSITIVE = 1
    NEGATIVE = -1

    def __neg__(self):
        return Sign(-int(self))

    @property
    def symbol(self) -> str:
        return "+" if self is Sign.POSITIVE else "-"

    @classmethod
    def from_symbol(cls, symbol: str) -> "Sign":
        return cls.POSITIVE if symbol == "+" else cls.NEGATIVE


class Role(Enum):
    """Whether a chord endpoint sits on the over or on the under strand."""

    OVER = "O"
    UNDER = "U"

    def flipped(self) -> "Role":
        return Role.UNDER if self is Role.OVER else Role.OVER


def _frozen(array):
    array.flags.writeable = False
    return array


class Endpoint(NamedTuple):
    """A chord endpoint: the chord it belongs to and its role."""

    chord: int
    role: Role

    def __str__(self):
        return f"{self.role.value}{self.chord}"


def _validate(endpoints, signs):
    n = len(signs)
    if len(endpoints) != 2 * n:
        msg = f"Expected {2 * n} endpoints for {n} chords, got {len(endpoints)}."
        raise GaussCodeError(msg)

    seen = set()
    for position, (chord, role) in enumerate(endpoints):
        if not 1 <= chord <= n:
            msg = f"Chord {chord} is outside 1..{n}."
            raise GaussCodeError(msg, position)
        if (chord, role) in seen:
            msg = f"Chord {chord} has two {role.name.lower()} endpoints."
            raise GaussCodeError(msg, position)
        seen.add((chord, role))


@dataclass(frozen=True, eq=False)
class GaussDiagram:
    """
    Gauss diagram of a virtual knot diagram.

    Diagrams compare equal when they differ only by a rotation of the
    endpoint sequence (a basepoint shift) and a relabelling of the chords.
    Knot equivalence is not decided here.

    Parameters
    ----------
    endpoints : tuple of Endpoint
        The ``2n`` endpoints in cyclic order, starting at the basepoint.

    signs : tuple of Sign
        ``signs[k - 1]`` is the sign of chord ``k``.

    See Also
    --------
    parse : Build a diagram from a Gauss code.
    """

    endpoints: Tuple[Endpoint, ...]
    signs: Tuple[Sign, ...]

    def __post_init__(self):
        endpoints = tuple(Endpoint(int(c), Role(r)) for c, r in self.endpoints)
        signs = tuple(Sign(int(s)) for s in self.signs)
        _validate(endpoints, signs)
        object.__setattr__(self, "endpoints", endpoints)
        object.__setattr__(self, "signs", signs)

    @classmethod
    def from_labelled(
        cls, endpoints: Iterable[Tuple[int, Role]], signs: Mapping[int, int]
    ) -> "GaussDiagram":
        """
        Build a diagram whose chord labels are arbitrary distinct integers.

        Labels are renumbered to ``1..n`` keeping their relative order.
        """
        endpoints = list(endpoints)
        order = {label: k for k, label in enumerate(sorted(signs), start=1)}
        return cls(
            tuple(Endpoint(order[label], Role(role)) for label, role in endpoints),
            tuple(Sign(int(signs[label])) for label in sorted(signs)),
        )

    @property
    def n(self) -> int:
        """Number of chords (real crossings)."""
        return len(self.signs)

    @cached_property
    def over_positions(self) -> np.ndarray:
        """Position of the over endpoint of every chord, indexed by ``chord - 1``."""
        positions = np.zeros(self.n, dtype=int)
        for position, (chord, role) in enumerate(self.endpoints):
            if role is Role.OVER:
                positions[chord - 1] = position
        return _frozen(positions)

    @cached_property
    def under_positions(self) -> np.ndarray:
        """Position of the under endpoint of every chord, indexed by ``chord - 1``."""
        positions = np.zeros(self.n, dtype=int)
        for position, (chord, role) in enumerate(self.endpoints):
            if role is Role.UNDER:
                positions[chord - 1] = position
        return _frozen(positions)

    @cached_property
    def endpoint_signs(self) -> np.ndarray:
        """
        Sign of every endpoint, ``-epsilon`` at the over endpoint and
        ``+epsilon`` at the under endpoint of a chord of sign ``epsilon``.
        """
        signs = np.array([int(self.signs[chord - 1]) for chord, _ in self.endpoints])
        over = np.array([role is Role.OVER for _, role in self.endpoints], dtype=bool)
        return _frozen(np.where(over, -signs, signs).astype(int))

    @cached_property
    def partners(self) -> np.ndarray:
        """Position of the other endpoint of the same chord."""
        partners = np.zeros(2 * self.n, dtype=int)
        partners[self.over_positions] = self.under_positions
        partners[self.under_positions] = self.over_positions
        return _frozen(partners)

    @cached_property
    def _canonical_tokens(self) -> Tuple[Tuple[str, int, str], ...]:
        size = len(self.endpoints)
        if not size:
            return ()
        return min(self._relabelled_tokens(start) for start in range(size))

    def _relabelled_tokens(self, start):
        size = len(self.endpoints)
        labels: dict = {}
        tokens = []
        for offset in range(size):
            chord, role = self.endpoints[(start + offset) % size]
            label = labels.setdefault(chord, len(labels) + 1)
            tokens.append((role.value, label, self.signs[chord - 1].symbol))
        return tuple(tokens)

    def sign(self, chord: int) -> Sign:
        return self.signs[chord - 1]

    def endpoint_sign(self, position: int) -> int:
        """Sign of the endpoint at ``position``, ``-epsilon`` when over."""
        return int(self.endpoint_signs[position])

    def partner(self, position: int) -> int:
        """Position of the other endpoint of the chord at ``position``."""
        return int(self.partners[position])

    def writhe(self) -> int:
        return sum(int(s) for s in self.signs)

    def to_code(self) -> str:
        """Gauss code as stored, without canonicalization."""
        return "".join(
            f"{role.value}{chord}{self.signs[chord - 1].symbol}"
            for chord, role in self.endpoints
        )

    def __eq__(self, other):
        if not isinstance(other, GaussDiagram):
            return NotImplemented
        return self._canonical_tokens == other._canonical_tokens

    def __hash__(self):
        return hash(self._canonical_tokens)

    def __str__(self):
        return self.to_code()

    def __repr__(self):
        return f"GaussDiagram('{self.to_code()}')"


def parse(code: str) -> GaussDiagram:
    """
    Parse a Gauss code.

    Parameters
    ----------
    code : str
        Sequence of tokens ``(O|U)<label>(+|-)`` such as
        ``"O1+U2+O3+U1+O2+U3+"``. Whitespace is ignored, ``o``/``u`` are
        accepted and the empty string is the trivial diagram.

    Returns
    -------
    GaussDiagram
        The diagram with chords renumbered ``1..n`` by first appearance.

    Raises
    ------
    GaussCodeError
        On a malformed token, a chord that does not occur exactly once as
        over and once as under, or a chord whose two tokens disagree in sign.
    """
    source = "".join(code.split()).replace("−", "-")
    tokens = []
    position = 0
    while position < len(source):
        match = _TOKEN.match(source, position)
        if match is None:
            msg = f"Invalid Gauss code token starting with {source[position:][:4]!r}"
            raise GaussCodeError(msg, position)
        role, label, symbol = match.groups()
        tokens.append((Role(role.upper()), int(label), Sign.from_symbol(symbol)))
        position = match.end()

    labels: dict = {}
    signs: dict = {}
    roles: dict = {}
    endpoints = []
    for index, (role, label, sign) in enumerate(tokens):
        if label == 0:
            raise GaussCodeError("Chord labels must be positive integers.", index)
        chord = labels.setdefault(label, len(labels) + 1)
        if signs.setdefault(chord, sign) != sign:
            msg = f"Chord {label} carries both signs."
            raise GaussCodeError(msg, index)
        if role in roles.setdefault(chord, set()):
            msg = f"Chord {label} appears twice as {role.value}."
            raise GaussCodeError(msg, index)
        roles[chord].add(role)
        endpoints.append(Endpoint(chord, role))

    for label, chord in labels.items():
        if len(roles[chord]) != 2:
            missing = "under" if Role.OVER in roles[chord] else "over"
            msg = f"Chord {label} lacks its {missing} endpoint."
            raise GaussCodeError(msg)

    return GaussDiagram(
        tuple(endpoints), tuple(signs[k] for k in range(1, len(labels) + 1))
    )


def canonical(d: GaussDiagram) -> GaussDiagram:
    """
    Canonical representative of ``d`` up to rotation and chord relabelling.

    Among all rotations, chords are relabelled by first appearance and the
    lexicographically least token sequence is kept.
    """
    tokens = d._canonical_tokens
    return GaussDiagram(
        tuple(Endpoint(label, Role(role)) for role, label, _ in tokens),
        tuple(
            Sign.from_symbol(symbol)
            for _, symbol in sorted(
                {(label, symbol) for _, label, symbol in tokens}
            )
        ),
    )


def serialize(d: GaussDiagram) -> str:
    """Canonical Gauss code of ``d``; the empty string for the trivial diagram."""
    return canonical(d).to_code()


def rotate(d: GaussDiagram, k: int) -> GaussDiagram:
    """Move the basepoint ``k`` endpoints forward."""
    if not d.endpoints:
        return d
    k %= len(d.endpoints)
    return GaussDiagram(d.endpoints[k:] + d.endpoints[:k], d.signs)


def linked(d: GaussDiagram, i: int, j: int) -> bool:
    """
    Whether chords ``i`` and ``j`` are linked, i.e. their endpoints alternate.

    Raises
    ------
    ValueError
        If ``i == j``.
    """
    if i == j:
        msg = f"A chord cannot be linked with itself (got i = j = {i})."
        raise ValueError(msg)
    low, high = sorted((d.over_positions[i - 1], d.under_positions[i - 1]))
    inside_o = low < d.over_positions[j - 1] < high
    inside_u = low < d.under_positions[j - 1] < high
    return bool(inside_o != inside_u)
