"""
Residue classes of Laurent polynomials modulo integer multiples of a modulus.

``f == g (mod h)`` holds when ``f - g = m h`` for some integer ``m``. This is
the equivalence used by the third intersection polynomial, whose modulus is
the symmetrized writhe polynomial. A zero modulus degenerates to plain
equality.
"""

from dataclasses import dataclass
from numbers import Integral
from typing import Optional

from ..exceptions import ModulusMismatchError
from ._poly import LaurentPoly


def _check_moduli(a: "LaurentClass", b: "LaurentClass"):
    # h and -h generate the same subgroup
    if a.modulus != b.modulus and a.modulus != -b.modulus:
        msg = (
            f"Cannot compare classes modulo {a.modulus} and {b.modulus}; "
            "moduli must agree up to sign."
        )
        raise ModulusMismatchError(msg)


@dataclass(frozen=True, eq=False)
class LaurentClass:
    """
    Class of ``representative`` in :math:`\\mathbb{Z}[t,t^{-1}] / \\mathbb{Z} h`.

    Equality (``==``) is class equality and is ``False`` for classes over
    unrelated moduli. Use :func:`class_equal` to get an error instead.

    Parameters
    ----------
    representative : LaurentPoly
        Any member of the class.

    modulus : LaurentPoly
        Generator ``h`` of the subgroup :math:`\\mathbb{Z} h`.
    """

    representative: LaurentPoly
    modulus: LaurentPoly

    def with_modulus(self, modulus: LaurentPoly) -> "LaurentClass":
        """Express the same class over ``modulus``, which must be ``±self.modulus``."""
        other = LaurentClass(self.representative, modulus)
        _check_moduli(self, other)
        return other

    def canonical(self) -> LaurentPoly:
        return canonical_representative(self)

    def max_degree(self) -> Optional[int]:
        return class_max_degree(self)

    def _lift(self, other) -> Optional[LaurentPoly]:
        if isinstance(other, LaurentClass):
            _check_moduli(self, other)
            return other.representative
        if isinstance(other, (LaurentPoly, Integral)):
            return LaurentPoly() + other
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return LaurentClass(self.representative + other, self.modulus)

    __radd__ = __add__

    def __neg__(self):
        return LaurentClass(-self.representative, self.modulus)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return LaurentClass(self.representative - other, self.modulus)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return LaurentClass(other - self.representative, self.modulus)

    def __mul__(self, other):
        if not isinstance(other, Integral):
            return NotImplemented
        return LaurentClass(self.representative * int(other), self.modulus)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LaurentClass):
            return NotImplemented
        try:
            return class_equal(self, other)
        except ModulusMismatchError:
            return False

    def __str__(self):
        return f"{canonical_representative(self)} (mod {self.modulus})"

    def __repr__(self):
        return (
            f"LaurentClass(representative={self.representative!r}, "
            f"modulus={self.modulus!r})"
        )


def class_equal(a: LaurentClass, b: LaurentClass) -> bool:
    """
    Decide whether two classes coincide.

    Parameters
    ----------
    a, b : LaurentClass
        Classes over the same modulus, up to sign.

    Returns
    -------
    bool
        ``True`` iff ``a.representative - b.representative`` is an integer
        multiple of the modulus. With a zero modulus this is plain equality.

    Raises
    ------
    ModulusMismatchError
        If the moduli differ by more than a sign.
    """
    _check_moduli(a, b)
    difference = a.representative - b.representative
    if not difference:
        return True

    modulus = a.modulus
    if not modulus:
        return False
    if difference.max_degree() != modulus.max_degree():
        return False

    lead_difference = difference.leading_coefficient()
    lead_modulus = modulus.leading_coefficient()
    if lead_difference % lead_modulus:
        return False
    return difference == modulus * (lead_difference // lead_modulus)


def _search_radius(representative: LaurentPoly, modulus: LaurentPoly) -> int:
    # Beyond this radius every candidate has a span at least the span of the
    # representative and a strictly larger coefficient norm.
    bound = max((abs(c) for _, c in representative.items()), default=0)
    ratio = 2 * representative.l1_norm() // modulus.l1_norm() + 1
    return max(bound, ratio)


def canonical_representative(a: LaurentClass) -> LaurentPoly:
    """
    Pick the printed representative of a class.

    Among ``rep - m * modulus`` for integers ``m``, the chosen member has the
    smallest span (the zero polynomial beats everything), then the smallest
    sum of absolute coefficients, then the smallest ``|m|``, then ``m >= 0``.

    Parameters
    ----------
    a : LaurentClass
        Class to represent.

    Returns
    -------
    LaurentPoly
        The chosen representative. With a zero modulus this is
        ``a.representative`` itself.

    Examples
    --------
    >>> from vknot.laurent import LaurentClass, LaurentPoly
    >>> f00 = LaurentPoly.from_string("t^3-t^2-t^-2+t^-3")
    >>> w = LaurentPoly.from_string("-t^3+t^2-t+2-t^-1+t^-2-t^-3")
    >>> str(canonical_representative(LaurentClass(f00, w)))
    '-t+2-t^-1'
    """
    representative, modulus = a.representative, a.modulus
    if not modulus:
        return representative

    def key(m):
        candidate = representative - modulus * m
        span = candidate.span()
        return (
            -1 if span is None else span,
            candidate.l1_norm(),
            abs(m),
            0 if m >= 0 else 1,
        )

    radius = _search_radius(representative, modulus)
    best = min(range(-radius, radius + 1), key=key)
    return representative - modulus * best


def class_max_degree(a: LaurentClass) -> Optional[int]:
    """
    Largest degree reached by a member of the class.

    Returns
    -------
    int or None
        ``max(deg rep, deg modulus)`` for a nonzero modulus, ``deg rep``
        otherwise; ``None`` when the class is ``{0}``.
    """
    degrees = [
        degree
        for degree in (a.representative.max_degree(), a.modulus.max_degree())
        if degree is not None
    ]
    return max(degrees) if degrees else None
