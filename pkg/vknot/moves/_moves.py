"""
Reidemeister moves on Gauss diagrams.

Every move returns a new diagram and leaves its argument untouched. Chords
created by a move receive the next free labels; removing chords renumbers
the remaining ones keeping their order.
"""

from typing import List

from ..diagram import Endpoint, GaussDiagram, Role, Sign
from ..exceptions import MoveError
from ..utils import check_chord, check_diagram
from ._spec import KinkType, MoveKind, MoveSpec, R2Variant


def _check_gap(d: GaussDiagram, gap) -> int:
    gap = int(gap)
    if not 0 <= gap <= 2 * d.n:
        msg = f"Insertion gap {gap} is outside 0..{2 * d.n}."
        raise MoveError(msg)
    return gap


def _check_sign(sign) -> Sign:
    try:
        return Sign(int(sign))
    except (TypeError, ValueError):
        msg = f"A crossing sign is +1 or -1, got {sign!r}."
        raise MoveError(msg) from None


def _insert(d: GaussDiagram, blocks, new_signs) -> GaussDiagram:
    # blocks sharing a gap are inserted in the order given
    endpoints = []
    size = len(d.endpoints)
    for gap in range(size + 1):
        for block_gap, tokens in blocks:
            if block_gap == gap:
                endpoints.extend(tokens)
        if gap < size:
            endpoints.append(d.endpoints[gap])
    return GaussDiagram(tuple(endpoints), d.signs + tuple(new_signs))


def _delete(d: GaussDiagram, chords) -> GaussDiagram:
    chords = set(chords)
    kept = [c for c in range(1, d.n + 1) if c not in chords]
    relabel = {old: new for new, old in enumerate(kept, start=1)}
    return GaussDiagram(
        tuple(
            Endpoint(relabel[chord], role)
            for chord, role in d.endpoints
            if chord in relabel
        ),
        tuple(d.sign(c) for c in kept),
    )


def _adjacent(d: GaussDiagram, first: int, second: int) -> bool:
    size = len(d.endpoints)
    return abs(first - second) in (1, size - 1)


def r1_add(d, position, sign, kink_type) -> GaussDiagram:
    """
    Add an isolated chord (a kink).

    Parameters
    ----------
    d : GaussDiagram or str
        Diagram to modify.

    position : int
        Gap ``0..2n`` receiving the two endpoints.

    sign : int or Sign
        Sign of the new crossing.

    kink_type : KinkType or str
        ``"gamma-empty"`` inserts ``O`` then ``U``, ``"gamma_bar-empty"``
        inserts ``U`` then ``O``.

    Returns
    -------
    GaussDiagram
        The diagram with the new chord labelled ``n + 1``.
    """
    d = check_diagram(d)
    gap = _check_gap(d, position)
    sign = _check_sign(sign)
    kink_type = KinkType(kink_type)

    chord = d.n + 1
    roles = (Role.OVER, Role.UNDER)
    if kink_type is KinkType.GAMMA_BAR_EMPTY:
        roles = roles[::-1]
    block = tuple(Endpoint(chord, role) for role in roles)
    return _insert(d, [(gap, block)], [sign])


def is_isolated(d: GaussDiagram, chord: int) -> bool:
    """Whether one arc of ``chord`` has no endpoint inside."""
    return _adjacent(d, d.over_positions[chord - 1], d.under_positions[chord - 1])


def r1_remove(d, chord) -> GaussDiagram:
    """
    Remove an isolated chord.

    Raises
    ------
    MoveError
        If both arcs of ``chord`` contain endpoints.
    """
    d = check_diagram(d)
    chord = check_chord(d, chord)
    if not is_isolated(d, chord):
        msg = f"Chord {chord} is not isolated and cannot be removed by R1."
        raise MoveError(msg)
    return _delete(d, [chord])


def r2_add(d, p, q, variant, sign) -> GaussDiagram:
    """
    Add two chords of opposite signs bounding a bigon.

    The over endpoints ``O_a O_b`` go into gap ``p`` and the under
    endpoints into gap ``q``, as ``U_b U_a`` for the antiparallel variant
    and ``U_a U_b`` for the parallel one. When ``p == q`` the over block
    comes first.

    Parameters
    ----------
    d : GaussDiagram or str
        Diagram to modify.

    p, q : int
        Gaps in ``0..2n``.

    variant : R2Variant or str
        ``"parallel"`` or ``"antiparallel"``.

    sign : int or Sign
        Sign of chord ``a = n + 1``; chord ``b = n + 2`` gets the opposite.

    Returns
    -------
    GaussDiagram

    Examples
    --------
    >>> from vknot.moves import r2_add
    >>> r2_add("", 0, 0, "antiparallel", 1).to_code()
    'O1+O2-U2-U1+'
    """
    d = check_diagram(d)
    p, q = _check_gap(d, p), _check_gap(d, q)
    variant = R2Variant(variant)
    sign = _check_sign(sign)

    a, b = d.n + 1, d.n + 2
    over = (Endpoint(a, Role.OVER), Endpoint(b, Role.OVER))
    under = (Endpoint(a, Role.UNDER), Endpoint(b, Role.UNDER))
    if variant is R2Variant.ANTIPARALLEL:
        under = under[::-1]
    return _insert(d, [(p, over), (q, under)], [sign, -sign])


def r2_removable(d: GaussDiagram, a: int, b: int) -> bool:
    """
    Whether chords ``a`` and ``b`` bound a bigon: opposite signs, adjacent
    over endpoints and adjacent under endpoints.
    """
    if a == b or d.sign(a) == d.sign(b):
        return False
    overs = d.over_positions
    unders = d.under_positions
    return _adjacent(d, overs[a - 1], overs[b - 1]) and _adjacent(
        d, unders[a - 1], unders[b - 1]
    )


def r2_remove(d, a, b) -> GaussDiagram:
    """
    Remove two chords bounding a bigon.

    Raises
    ------
    MoveError
        If the chords coincide, share a sign, or another endpoint sits
        between their over or their under endpoints.
    """
    d = check_diagram(d)
    a, b = check_chord(d, a), check_chord(d, b)
    if a == b:
        raise MoveError("R2 removes two distinct chords.")
    if d.sign(a) == d.sign(b):
        msg = f"Chords {a} and {b} have the same sign and bound no bigon."
        raise MoveError(msg)
    if not r2_removable(d, a, b):
        msg = f"Chords {a} and {b} do not bound a bigon."
        raise MoveError(msg)
    return _delete(d, [a, b])


def _pairs(d: GaussDiagram):
    size = len(d.endpoints)
    for start in range(size):
        first, second = d.endpoints[start], d.endpoints[(start + 1) % size]
        if first.chord != second.chord:
            yield start, first, second


def _triangle_consistent(d, top, middle, bottom, tm, tb, mb) -> bool:
    # o = +1 when the pair is met in the stated order
    o_top = 1 if top[0].chord == tm else -1
    o_middle = 1 if middle[0] == Endpoint(tm, Role.UNDER) else -1
    o_bottom = 1 if bottom[0].chord == tb else -1
    first = int(d.sign(tm)) * o_top * o_middle
    second = int(d.sign(tb)) * o_top * o_bottom
    third = int(d.sign(mb)) * o_middle * o_bottom
    return first == second == third


def r3_applicable(d) -> List[MoveSpec]:
    """
    List the sites where a third Reidemeister move applies.

    A site is three pairs of adjacent endpoints covering three chords: a top
    pair of over endpoints ``O_TM, O_TB``, a bottom pair of under endpoints
    ``U_TB, U_MB`` and a middle pair ``U_TM, O_MB``, in either order within
    each pair. The move realises a triangle only when the signs agree with
    the orders of the pairs.

    Returns
    -------
    list of MoveSpec
        One ``R3`` spec per site, sorted by the start positions of the top,
        middle and bottom pairs.
    """
    d = check_diagram(d)
    if d.n < 3:
        return []

    pairs = list(_pairs(d))
    tops = [pair for pair in pairs if pair[1].role is pair[2].role is Role.OVER]
    bottoms = [pair for pair in pairs if pair[1].role is pair[2].role is Role.UNDER]
    middles = [pair for pair in pairs if pair[1].role is not pair[2].role]

    specs = []
    for t_start, *top in tops:
        top_chords = {top[0].chord, top[1].chord}
        for b_start, *bottom in bottoms:
            shared = top_chords & {bottom[0].chord, bottom[1].chord}
            if len(shared) != 1:
                continue
            (tb,) = shared
            tm = (top_chords - shared).pop()
            mb = ({bottom[0].chord, bottom[1].chord} - shared).pop()
            wanted = {Endpoint(tm, Role.UNDER), Endpoint(mb, Role.OVER)}
            for m_start, *middle in middles:
                if set(middle) != wanted:
                    continue
                if _triangle_consistent(d, top, middle, bottom, tm, tb, mb):
                    specs.append(MoveSpec(MoveKind.R3, (t_start, m_start, b_start)))
    return sorted(specs, key=lambda spec: spec.params)


def r3_apply(d, spec) -> GaussDiagram:
    """
    Apply a third Reidemeister move.

    The endpoints of each of the three pairs trade places; signs do not
    change. Applying the same spec twice restores the diagram.

    Raises
    ------
    MoveError
        If ``spec`` is not one of :func:`r3_applicable` for ``d``.
    """
    d = check_diagram(d)
    if isinstance(spec, str):
        spec = MoveSpec.parse(spec)
    if spec.kind is not MoveKind.R3 or spec not in r3_applicable(d):
        msg = f"{spec} is not an R3 site of {d.to_code()}."
        raise MoveError(msg)

    endpoints = list(d.endpoints)
    size = len(endpoints)
    for start in spec.params:
        following = (start + 1) % size
        endpoints[start], endpoints[following] = endpoints[following], endpoints[start]
    return GaussDiagram(tuple(endpoints), d.signs)
