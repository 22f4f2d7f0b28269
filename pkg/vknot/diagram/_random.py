"""
Random Gauss diagrams, used to feed the randomized test campaigns.
"""

from sklearn.utils import check_random_state

from ._gauss import Endpoint, GaussDiagram, Role, Sign


def random_diagram(n, random_state=None) -> GaussDiagram:
    """
    Draw a Gauss diagram with ``n`` chords.

    The chords form a uniformly random perfect matching of the ``2n``
    positions. Each chord gets a random orientation and a random sign.

    Parameters
    ----------
    n : int
        Number of chords, ``n >= 0``.

    random_state : int, RandomState instance or None, default=None
        Seed or generator, as accepted by
        :func:`sklearn.utils.check_random_state`. A fixed integer gives the
        same diagram on every call.

    Returns
    -------
    GaussDiagram
        Chords are labelled by first appearance.

    Examples
    --------
    >>> from vknot.diagram import random_diagram
    >>> random_diagram(0, random_state=7).n
    0
    """
    n = int(n)
    if n < 0:
        msg = f"The number of chords must be non-negative, got {n}."
        raise ValueError(msg)

    rng = check_random_state(random_state)
    order = rng.permutation(2 * n)
    over_first = rng.randint(2, size=n).astype(bool)
    signs = rng.choice([1, -1], size=n)

    endpoints = [None] * (2 * n)
    for chord in range(n):
        first, second = order[2 * chord], order[2 * chord + 1]
        if not over_first[chord]:
            first, second = second, first
        endpoints[first] = (chord, Role.OVER)
        endpoints[second] = (chord, Role.UNDER)

    labels: dict = {}
    for chord, _ in endpoints:
        labels.setdefault(chord, len(labels) + 1)
    return GaussDiagram(
        tuple(Endpoint(labels[chord], role) for chord, role in endpoints),
        tuple(Sign(int(signs[chord])) for chord in sorted(labels, key=labels.get)),
    )
