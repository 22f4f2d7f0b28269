import os
from numbers import Integral

from ..diagram import GaussDiagram, parse

DEFAULT_MAX_CHORDS = 12
MAX_CHORDS_ENV = "VKNOT_MAX_CHORDS"


def _is_integer(value):
    return isinstance(value, Integral) and not isinstance(value, bool)


def check_diagram(diagram):
    """
    Accept a GaussDiagram or a Gauss code and return a GaussDiagram.
    """
    if isinstance(diagram, GaussDiagram):
        return diagram
    elif isinstance(diagram, str):
        return parse(diagram)
    else:
        msg = (
            "Expected a GaussDiagram or a Gauss code string, got "
            f"{type(diagram).__name__}."
        )
        raise TypeError(msg)


def check_chord(diagram, chord):
    """
    Check that ``chord`` is a chord label of ``diagram`` and return it as int.
    """
    if not _is_integer(chord):
        msg = f"Chord labels are integers, got {type(chord).__name__}."
        raise TypeError(msg)
    if not 1 <= chord <= diagram.n:
        msg = f"Chord {chord} is outside 1..{diagram.n}."
        raise ValueError(msg)
    return int(chord)


def check_arc(diagram, arc):
    """
    Convert ``(chord, kind)`` to an ArcRef of ``diagram``. ``kind`` is an
    ArcKind or its value, 0 for gamma and 1 for gamma_bar.
    """
    from ..intersect import ArcKind, ArcRef

    try:
        chord, kind = arc
    except (TypeError, ValueError):
        msg = f"Expected an arc as a (chord, kind) pair, got {arc!r}."
        raise TypeError(msg) from None

    try:
        kind = ArcKind(kind)
    except ValueError:
        msg = f"Unknown arc kind {kind!r}; use 0 for gamma and 1 for gamma_bar."
        raise ValueError(msg) from None

    return ArcRef(check_chord(diagram, chord), kind)


def check_max_chords(max_chords=None):
    """
    Resolve the chord cap of random walks.

    An explicit value wins, then the ``VKNOT_MAX_CHORDS`` environment variable,
    then the default of 12. Caps below 2 leave no room for a second
    Reidemeister move and are rejected.
    """
    source = "max_chords"
    if max_chords is None:
        max_chords = os.environ.get(MAX_CHORDS_ENV)
        source = MAX_CHORDS_ENV
        if max_chords is None:
            return DEFAULT_MAX_CHORDS
        try:
            max_chords = int(max_chords)
        except ValueError:
            msg = f"{MAX_CHORDS_ENV} must be an integer, got {max_chords!r}."
            raise ValueError(msg) from None

    if not _is_integer(max_chords):
        msg = f"`max_chords` must be an integer, got {type(max_chords).__name__}."
        raise TypeError(msg)
    if max_chords < 2:
        msg = f"{source} must be at least 2, got {max_chords}."
        raise ValueError(msg)
    return int(max_chords)


def check_n_jobs(n_jobs):
    """
    Validate the number of parallel jobs. None means 1 and -1 means all
    processors.
    """
    if n_jobs is None:
        return 1
    if not _is_integer(n_jobs):
        msg = f"`n_jobs` must be an integer or None, got {type(n_jobs).__name__}."
        raise TypeError(msg)
    if n_jobs == 0 or n_jobs < -1:
        msg = f"`n_jobs` must be a positive integer or -1, got {n_jobs}."
        raise ValueError(msg)
    return int(n_jobs)
