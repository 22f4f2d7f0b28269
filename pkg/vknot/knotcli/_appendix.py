"""
The compact polynomial notations of the published tables.

Braced: ``{n}(a0+a1+...+am)`` stands for ``a0 t^n + a1 t^(n+1) + ...`` with
``a0`` and ``am`` nonzero. Symmetric: ``[b0+b1+...+bm`` stands for
``b0 + b1 (t + t^-1) + ... + bm (t^m + t^-m)`` and only fits reciprocal
polynomials. The zero polynomial is written ``0`` in both styles.
"""

import re
from enum import Enum
from typing import List, Optional

from ..exceptions import NotationError
from ..laurent import LaurentPoly

# no leading zeros and no signed zero, so every value has a single text
_FIRST = r"(?:0|-?[1-9]\d*)"
_NEXT = r"(?:\+0|[+-][1-9]\d*)"
_BRACED = re.compile(r"^\{(" + _FIRST + r")\}\((" + _FIRST + _NEXT + r"*)\)$")
_SYMMETRIC = re.compile(r"^\[(" + _FIRST + _NEXT + r"*)$")
_COEFFICIENT = re.compile(r"[+-]?\d+")


class AppendixStyle(Enum):
    BRACED = "braced"
    SYMMETRIC = "symmetric"


def _join(coefficients: List[int]) -> str:
    head, *tail = coefficients
    return str(head) + "".join(f"{c:+d}" for c in tail)


def _split(text: str) -> List[int]:
    return [int(c) for c in _COEFFICIENT.findall(text)]


def format_appendix(p: LaurentPoly, style="braced") -> str:
    """
    Write ``p`` in a table notation.

    Parameters
    ----------
    p : LaurentPoly
        Polynomial to write.

    style : {"braced", "symmetric"}, default="braced"
        Notation to use.

    Returns
    -------
    str

    Raises
    ------
    NotationError
        If ``style="symmetric"`` and ``p`` is not reciprocal.

    Examples
    --------
    >>> from vknot.laurent import LaurentPoly
    >>> from vknot.knotcli import format_appendix
    >>> format_appendix(LaurentPoly.from_string("-2t^3+4t^2-2t"))
    '{1}(-2+4-2)'
    >>> format_appendix(LaurentPoly.from_string("-t+2-t^-1"), "symmetric")
    '[2-1'
    """
    style = AppendixStyle(style)
    if not p:
        return "0"

    if style is AppendixStyle.BRACED:
        low, high = p.min_degree(), p.max_degree()
        coefficients = [p.coefficient(k) for k in range(low, high + 1)]
        return f"{{{low}}}({_join(coefficients)})"

    if not p.is_reciprocal():
        msg = f"{p} is not reciprocal and has no symmetric form."
        raise NotationError(msg)
    coefficients = [p.coefficient(k) for k in range(p.max_degree() + 1)]
    return f"[{_join(coefficients)}"


def _detect(text: str) -> Optional[AppendixStyle]:
    if text.startswith("{"):
        return AppendixStyle.BRACED
    if text.startswith("["):
        return AppendixStyle.SYMMETRIC
    return None


def parse_appendix(text: str, style=None) -> LaurentPoly:
    """
    Read a polynomial written by :func:`format_appendix`.

    Parameters
    ----------
    text : str
        The notation; surrounding whitespace is ignored.

    style : {"braced", "symmetric"}, default=None
        Expected notation. None accepts either one.

    Returns
    -------
    LaurentPoly

    Raises
    ------
    NotationError
        On malformed text, a style other than the expected one, a zero
        outer coefficient or a number with a leading zero or a signed zero.
        Every polynomial has exactly one accepted text in each style.
    """
    text = text.strip()
    if text == "0":
        return LaurentPoly()

    detected = _detect(text)
    if style is not None and detected is not AppendixStyle(style):
        msg = f"{text!r} is not in {AppendixStyle(style).value} notation."
        raise NotationError(msg)

    if detected is AppendixStyle.BRACED:
        match = _BRACED.match(text)
        if match is None:
            raise NotationError(f"Malformed braced notation {text!r}.")
        low = int(match.group(1))
        coefficients = _split(match.group(2))
        if coefficients[0] == 0 or coefficients[-1] == 0:
            msg = f"Outer coefficients of {text!r} must be nonzero."
            raise NotationError(msg)
        return LaurentPoly({low + k: c for k, c in enumerate(coefficients)})

    if detected is AppendixStyle.SYMMETRIC:
        match = _SYMMETRIC.match(text)
        if match is None:
            raise NotationError(f"Malformed symmetric notation {text!r}.")
        coefficients = _split(match.group(1))
        if coefficients[-1] == 0:
            msg = f"Last coefficient of {text!r} must be nonzero; zero is '0'."
            raise NotationError(msg)
        terms = {0: coefficients[0]}
        for k, c in enumerate(coefficients[1:], start=1):
            terms[k] = terms[-k] = c
        return LaurentPoly(terms)

    raise NotationError(f"Unknown polynomial notation {text!r}.")
