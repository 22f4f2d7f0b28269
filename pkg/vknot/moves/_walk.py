"""
Enumeration, application and random sequences of Reidemeister moves.
"""

import logging
from itertools import combinations, product
from typing import Iterable, List, Optional, Tuple, Union

from sklearn.utils import check_random_state

from ..diagram import GaussDiagram, Sign
from ..utils import check_diagram, check_max_chords
from ._moves import (
    is_isolated,
    r1_add,
    r1_remove,
    r2_add,
    r2_removable,
    r2_remove,
    r3_applicable,
    r3_apply,
)
from ._spec import KinkType, MoveKind, MoveSpec, R2Variant

logger = logging.getLogger(__name__)

_SIGNS = (Sign.POSITIVE, Sign.NEGATIVE)


def _r1_removals(d):
    return [
        MoveSpec(MoveKind.R1_REMOVE, (c,))
        for c in range(1, d.n + 1)
        if is_isolated(d, c)
    ]


def _r2_removals(d):
    return [
        MoveSpec(MoveKind.R2_REMOVE, (a, b))
        for a, b in combinations(range(1, d.n + 1), 2)
        if r2_removable(d, a, b)
    ]


def applicable_moves(d, max_chords=None) -> List[MoveSpec]:
    """
    Every move applicable to ``d`` without exceeding the chord cap.

    Parameters
    ----------
    d : GaussDiagram or str
        Diagram.

    max_chords : int, default=None
        Chord cap; see :func:`vknot.utils.check_max_chords`.

    Returns
    -------
    list of MoveSpec
    """
    d = check_diagram(d)
    max_chords = check_max_chords(max_chords)
    gaps = range(2 * d.n + 1)

    moves = []
    if d.n + 1 <= max_chords:
        moves.extend(
            MoveSpec(MoveKind.R1_ADD, params)
            for params in product(gaps, _SIGNS, KinkType)
        )
    moves.extend(_r1_removals(d))
    if d.n + 2 <= max_chords:
        moves.extend(
            MoveSpec(MoveKind.R2_ADD, params)
            for params in product(gaps, gaps, R2Variant, _SIGNS)
        )
    moves.extend(_r2_removals(d))
    moves.extend(r3_applicable(d))
    return moves


def apply_move(d, spec: Union[MoveSpec, str]) -> GaussDiagram:
    """
    Apply one move given as a :class:`MoveSpec` or its text form.

    Raises
    ------
    MoveError
        If the move does not apply to ``d``.
    """
    d = check_diagram(d)
    if isinstance(spec, str):
        spec = MoveSpec.parse(spec)

    if spec.kind is MoveKind.R1_ADD:
        return r1_add(d, *spec.params)
    elif spec.kind is MoveKind.R1_REMOVE:
        return r1_remove(d, *spec.params)
    elif spec.kind is MoveKind.R2_ADD:
        return r2_add(d, *spec.params)
    elif spec.kind is MoveKind.R2_REMOVE:
        return r2_remove(d, *spec.params)
    return r3_apply(d, spec)


def _draw(rng, options):
    return options[rng.randint(len(options))]


def _random_move(d, rng, max_chords) -> Optional[MoveSpec]:
    gap_count = 2 * d.n + 1
    candidates = {}
    if d.n + 1 <= max_chords:
        candidates[MoveKind.R1_ADD] = None
    if d.n + 2 <= max_chords:
        candidates[MoveKind.R2_ADD] = None
    for kind, found in (
        (MoveKind.R1_REMOVE, _r1_removals(d)),
        (MoveKind.R2_REMOVE, _r2_removals(d)),
        (MoveKind.R3, r3_applicable(d)),
    ):
        if found:
            candidates[kind] = found

    if not candidates:
        return None
    kind = _draw(rng, list(candidates))
    if kind is MoveKind.R1_ADD:
        params = (rng.randint(gap_count), _draw(rng, _SIGNS), _draw(rng, list(KinkType)))
        return MoveSpec(kind, params)
    if kind is MoveKind.R2_ADD:
        params = (
            rng.randint(gap_count),
            rng.randint(gap_count),
            _draw(rng, list(R2Variant)),
            _draw(rng, _SIGNS),
        )
        return MoveSpec(kind, params)
    return _draw(rng, candidates[kind])


def random_walk(
    d, steps, random_state=None, max_chords=None
) -> Tuple[GaussDiagram, List[MoveSpec]]:
    """
    Apply a sequence of random applicable moves.

    At every step a move kind is drawn uniformly among those available, then
    its parameters uniformly. Additions are unavailable once they would take
    the diagram past ``max_chords`` chords, which keeps the walk bounded. A
    diagram at the cap with no removal and no R3 site admits no move. The walk
    then stops early and the log holds the moves actually applied.

    Parameters
    ----------
    d : GaussDiagram or str
        Starting diagram.

    steps : int
        Largest number of moves.

    random_state : int, RandomState instance or None, default=None
        Seed or generator. The same seed reproduces the same walk.

    max_chords : int, default=None
        Chord cap. Falls back to ``VKNOT_MAX_CHORDS``, then to 12.

    Returns
    -------
    diagram : GaussDiagram
        The diagram reached.

    log : list of MoveSpec
        The moves applied, in order; :func:`replay` reproduces the walk.
    """
    d = check_diagram(d)
    max_chords = check_max_chords(max_chords)
    if d.n > max_chords:
        msg = f"The starting diagram has {d.n} chords, more than the cap {max_chords}."
        raise ValueError(msg)
    rng = check_random_state(random_state)

    log = []
    for step in range(int(steps)):
        spec = _random_move(d, rng, max_chords)
        if spec is None:
            logger.info(
                "no applicable move at step %d with %d chords (cap %d), stopping",
                step,
                d.n,
                max_chords,
            )
            break
        d = apply_move(d, spec)
        log.append(spec)
        logger.debug("step %d: %s -> %d chords", step, spec, d.n)
    logger.info("random walk of %d moves ended with %d chords", len(log), d.n)
    return d, log


def replay(d, log: Iterable[Union[MoveSpec, str]]) -> GaussDiagram:
    """Apply the moves of ``log`` in order."""
    d = check_diagram(d)
    for spec in log:
        d = apply_move(d, spec)
    return d
