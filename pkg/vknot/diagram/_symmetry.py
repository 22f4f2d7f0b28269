"""
Orientation and mirror symmetries of Gauss diagrams.
"""

from typing import Dict

from ._gauss import Endpoint, GaussDiagram


def reverse(d: GaussDiagram) -> GaussDiagram:
    """
    Reverse the orientation of the knot, giving the diagram ``-D``.

    The endpoints are read backwards; roles and signs are unchanged.
    """
    return GaussDiagram(tuple(reversed(d.endpoints)), d.signs)


def vertical_mirror(d: GaussDiagram) -> GaussDiagram:
    """
    Switch every crossing, giving the diagram ``D#``.

    Each over endpoint becomes an under endpoint and vice versa, and every
    chord sign is negated.
    """
    return GaussDiagram(
        tuple(Endpoint(chord, role.flipped()) for chord, role in d.endpoints),
        tuple(-s for s in d.signs),
    )


def horizontal_mirror(d: GaussDiagram) -> GaussDiagram:
    """
    Reflect the supporting surface, giving the diagram ``D*``.

    A reflection keeps the order in which the knot meets its crossings and
    which strand is on top, but every crossing changes sign. Hence the
    endpoint sequence and roles are kept and the signs are negated.

    Notes
    -----
    Reversing the endpoint order as well yields ``-D*``, see
    :func:`symmetry_variants`.
    """
    return GaussDiagram(d.endpoints, tuple(-s for s in d.signs))


def symmetry_variants(d: GaussDiagram) -> Dict[str, GaussDiagram]:
    """
    The eight diagrams obtained from ``d`` by reversal and the two mirrors.

    Returns
    -------
    dict of str to GaussDiagram
        Keys are ``"K"``, ``"-K"``, ``"K#"``, ``"K*"``, ``"-K#"``, ``"-K*"``,
        ``"K#*"`` and ``"-K#*"``, in this order.
    """
    sharp = vertical_mirror(d)
    star = horizontal_mirror(d)
    sharp_star = horizontal_mirror(sharp)
    return {
        "K": d,
        "-K": reverse(d),
        "K#": sharp,
        "K*": star,
        "-K#": reverse(sharp),
        "-K*": reverse(star),
        "K#*": sharp_star,
        "-K#*": reverse(sharp_star),
    }
