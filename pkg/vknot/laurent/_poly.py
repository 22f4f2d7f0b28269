"""
Sparse Laurent polynomials in one variable ``t`` with integer coefficients.

A polynomial is stored as a map from exponent to coefficient. Zero
coefficients are never stored, so the zero polynomial is the empty map.
Python integers are used throughout, hence coefficients are unbounded.
"""

import re
from numbers import Integral
from types import MappingProxyType
from typing import Iterator, Mapping, Optional, Tuple

from ..exceptions import NotationError

_TERM = re.compile(r"([+-])?(\d+)?(t(?:\^(-?\d+))?)?")


class LaurentPoly:
    """
    Element of the ring of integral Laurent polynomials :math:`\\mathbb{Z}[t, t^{-1}]`.

    Instances are immutable. Arithmetic operators return new polynomials and
    accept plain integers wherever a constant polynomial makes sense.

    Parameters
    ----------
    terms : mapping of int to int, default=None
        Coefficient of each exponent. Zero coefficients are dropped.

    Examples
    --------
    >>> from vknot.laurent import LaurentPoly
    >>> p = LaurentPoly({3: -1, 2: 1, 0: 1, -1: -1})
    >>> str(p)
    '-t^3+t^2+1-t^-1'
    >>> str(p + p.substitute_inverse())
    '-t^3+t^2-t+2-t^-1+t^-2-t^-3'
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[int, int]] = None):
        cleaned = {}
        if terms is not None:
            for exponent, coefficient in terms.items():
                coefficient = int(coefficient)
                if coefficient:
                    cleaned[int(exponent)] = coefficient
        self._terms = cleaned

    @classmethod
    def _from_pairs(cls, pairs) -> "LaurentPoly":
        # Accumulates repeated exponents
        terms: dict = {}
        for exponent, coefficient in pairs:
            exponent = int(exponent)
            terms[exponent] = terms.get(exponent, 0) + int(coefficient)
        return cls(terms)

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPoly":
        """Return ``coefficient * t**exponent``."""
        return cls({exponent: coefficient})

    @classmethod
    def constant(cls, value: int) -> "LaurentPoly":
        """Return the constant polynomial ``value``."""
        return cls({0: value})

    @property
    def terms(self) -> Mapping[int, int]:
        """Read-only view of the exponent to coefficient map."""
        return MappingProxyType(self._terms)

    def items(self) -> Iterator[Tuple[int, int]]:
        """Iterate over ``(exponent, coefficient)`` in descending exponent order."""
        for exponent in sorted(self._terms, reverse=True):
            yield exponent, self._terms[exponent]

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def max_degree(self) -> Optional[int]:
        return max(self._terms) if self._terms else None

    def min_degree(self) -> Optional[int]:
        return min(self._terms) if self._terms else None

    def span(self) -> Optional[int]:
        if not self._terms:
            return None
        return max(self._terms) - min(self._terms)

    def leading_coefficient(self) -> int:
        """Coefficient of the largest exponent, 0 for the zero polynomial."""
        return self._terms[max(self._terms)] if self._terms else 0

    def l1_norm(self) -> int:
        """Sum of the absolute values of the coefficients."""
        return sum(abs(c) for c in self._terms.values())

    def substitute_inverse(self) -> "LaurentPoly":
        """Return the polynomial obtained by substituting ``t`` with ``t^-1``."""
        return LaurentPoly({-k: c for k, c in self._terms.items()})

    def is_reciprocal(self) -> bool:
        return self == self.substitute_inverse()

    def evaluate(self, value: int):
        """
        Evaluate the polynomial at ``t = value``.

        Integer arguments other than ``1`` and ``-1`` produce a
        :class:`fractions.Fraction` when negative exponents are present.
        """
        from fractions import Fraction

        total = Fraction(0)
        for exponent, coefficient in self._terms.items():
            total += coefficient * Fraction(value) ** exponent
        return int(total) if total.denominator == 1 else total

    # Arithmetic

    def _coerce(self, other) -> Optional["LaurentPoly"]:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, Integral):
            return LaurentPoly.constant(int(other))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for exponent, coefficient in other._terms.items():
            terms[exponent] = terms.get(exponent, 0) + coefficient
        return LaurentPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, Integral):
            other = int(other)
            return LaurentPoly({k: other * c for k, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return LaurentPoly._from_pairs(
            (k1 + k2, c1 * c2)
            for k1, c1 in self._terms.items()
            for k2, c2 in other._terms.items()
        )

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    # Text

    def to_string(self) -> str:
        """
        Canonical ASCII rendering, terms in strictly descending exponent order.

        Returns
        -------
        str
            For instance ``"-2t^3+4t^2-2t"``, ``"t^-1"`` or ``"0"``.
        """
        if not self._terms:
            return "0"

        pieces = []
        for exponent, coefficient in self.items():
            sign = "-" if coefficient < 0 else "+"
            magnitude = abs(coefficient)
            if exponent == 0:
                body = str(magnitude)
            else:
                variable = "t" if exponent == 1 else f"t^{exponent}"
                body = variable if magnitude == 1 else f"{magnitude}{variable}"
            if not pieces and sign == "+":
                sign = ""
            pieces.append(sign + body)
        return "".join(pieces)

    @classmethod
    def from_string(cls, text: str) -> "LaurentPoly":
        """
        Parse the canonical rendering produced by :meth:`to_string`.

        Terms may come in any order and repeated exponents are summed.
        Whitespace is ignored and the Unicode minus sign is accepted.

        Parameters
        ----------
        text : str
            Text such as ``"-t^3+t^2+1-t^-1"``.

        Returns
        -------
        LaurentPoly
            The parsed polynomial.
        """
        source = "".join(text.split()).replace("−", "-")
        if not source:
            msg = "Empty polynomial text; use '0' for the zero polynomial."
            raise NotationError(msg)

        pairs = []
        position = 0
        while position < len(source):
            match = _TERM.match(source, position)
            sign, digits, variable, exponent = match.groups()
            if digits is None and variable is None:
                msg = f"Unexpected character {source[position]!r} in {text!r}."
                raise NotationError(msg)
            if sign is None and position > 0:
                msg = f"Missing sign before term at offset {position} in {text!r}."
                raise NotationError(msg)

            coefficient = int(digits) if digits is not None else 1
            if sign == "-":
                coefficient = -coefficient
            if variable is None:
                degree = 0
            else:
                degree = int(exponent) if exponent is not None else 1

            pairs.append((degree, coefficient))
            position = match.end()

        return cls._from_pairs(pairs)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"LaurentPoly('{self.to_string()}')"


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Coefficient-wise sum of two polynomials."""
    return p + q


def scale(m: int, p: LaurentPoly) -> LaurentPoly:
    """Multiply every coefficient of ``p`` by the integer ``m``."""
    return p * int(m)


def monomial_minus_one(k: int) -> LaurentPoly:
    """
    Return :math:`t^k - 1`, the summand of every writhe and intersection sum.

    Parameters
    ----------
    k : int
        Exponent.

    Returns
    -------
    LaurentPoly
        The zero polynomial when ``k == 0``.
    """
    return LaurentPoly._from_pairs([(k, 1), (0, -1)])


def substitute_inverse(p: LaurentPoly) -> LaurentPoly:
    """Return ``p(t^-1)``."""
    return p.substitute_inverse()


def max_degree(p: LaurentPoly) -> Optional[int]:
    """Largest exponent with a nonzero coefficient, ``None`` for the zero polynomial."""
    return p.max_degree()


def min_degree(p: LaurentPoly) -> Optional[int]:
    """Smallest exponent with a nonzero coefficient, ``None`` for the zero polynomial."""
    return p.min_degree()


def span(p: LaurentPoly) -> Optional[int]:
    """Difference between the maximal and minimal degree, ``None`` for zero."""
    return p.span()


def is_reciprocal(p: LaurentPoly) -> bool:
    """Whether ``p(t) == p(t^-1)``."""
    return p.is_reciprocal()
