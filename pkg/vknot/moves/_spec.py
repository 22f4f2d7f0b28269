"""
Descriptors of Reidemeister moves and their one-line text form.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from ..diagram import Sign
from ..exceptions import MoveError


class MoveKind(Enum):
    R1_ADD = "R1add"
    R1_REMOVE = "R1remove"
    R2_ADD = "R2add"
    R2_REMOVE = "R2remove"
    R3 = "R3"


class KinkType(Enum):
    """Which arc of a new first-move chord has no endpoint inside."""

    GAMMA_EMPTY = "gamma-empty"
    GAMMA_BAR_EMPTY = "gamma_bar-empty"


class R2Variant(Enum):
    """Whether the two strands of a second move run the same way."""

    PARALLEL = "parallel"
    ANTIPARALLEL = "antiparallel"


def _sign(value) -> Sign:
    if isinstance(value, str):
        if value not in ("+", "-"):
            msg = f"Expected a sign '+' or '-', got {value!r}."
            raise MoveError(msg)
        return Sign.from_symbol(value)
    return Sign(int(value))


_ARITY = {
    MoveKind.R1_ADD: 3,
    MoveKind.R1_REMOVE: 1,
    MoveKind.R2_ADD: 4,
    MoveKind.R2_REMOVE: 2,
    MoveKind.R3: 3,
}


@dataclass(frozen=True)
class MoveSpec:
    """
    One Reidemeister move at a concrete site of a diagram.

    Parameters
    ----------
    kind : MoveKind
        The move.

    params : tuple
        ``(gap, sign, kink_type)`` for ``R1add``, ``(chord,)`` for
        ``R1remove``, ``(gap_p, gap_q, variant, sign)`` for ``R2add``,
        ``(chord_a, chord_b)`` for ``R2remove`` and the start positions
        ``(top, middle, bottom)`` of the three endpoint pairs for ``R3``.
        Gaps range over ``0..2n``, gap ``g`` sitting just before the
        endpoint at position ``g``.

    Examples
    --------
    >>> from vknot.moves import MoveSpec
    >>> str(MoveSpec.parse("R2add 0 3 parallel -"))
    'R2add 0 3 parallel -'
    """

    kind: MoveKind
    params: Tuple

    def __post_init__(self):
        kind = MoveKind(self.kind)
        params = tuple(self.params)
        if len(params) != _ARITY[kind]:
            msg = f"{kind.value} takes {_ARITY[kind]} parameters, got {len(params)}."
            raise MoveError(msg)

        if kind is MoveKind.R1_ADD:
            params = (int(params[0]), _sign(params[1]), KinkType(params[2]))
        elif kind is MoveKind.R2_ADD:
            params = (
                int(params[0]),
                int(params[1]),
                R2Variant(params[2]),
                _sign(params[3]),
            )
        else:
            params = tuple(int(p) for p in params)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "params", params)

    def __str__(self):
        words = [self.kind.value]
        for param in self.params:
            if isinstance(param, Sign):
                words.append(param.symbol)
            elif isinstance(param, Enum):
                words.append(param.value)
            else:
                words.append(str(param))
        return " ".join(words)

    @classmethod
    def parse(cls, line: str) -> "MoveSpec":
        """
        Read a move from its one-line text form.

        Raises
        ------
        MoveError
            If the line does not describe a move.
        """
        words = line.split()
        if not words:
            raise MoveError("Empty move description.")
        try:
            return cls(MoveKind(words[0]), tuple(words[1:]))
        except ValueError as error:
            if isinstance(error, MoveError):
                raise
            msg = f"Cannot read move {line.strip()!r}: {error}"
            raise MoveError(msg) from None
