"""
Closed-form invariants of four infinite families of virtual knots.

Only the polynomial values are known here, not Gauss codes of the diagrams,
so these families feed the bound and distinctness criteria directly.
"""

from dataclasses import dataclass

from ..laurent import LaurentClass, LaurentPoly


def _t(k: int, coefficient: int = 1) -> LaurentPoly:
    return LaurentPoly.monomial(k, coefficient)


def _sym(k: int) -> LaurentPoly:
    # t^k + t^-k, which is 2 for k = 0
    return _t(k) + _t(-k)


def _sum(polys) -> LaurentPoly:
    return sum(polys, LaurentPoly())


@dataclass(frozen=True)
class ClosedForm:
    """
    Known values of ``W``, ``I``, ``II`` and a representative of ``III``.

    ``Wbar`` is derived from ``W`` and ``III`` is taken modulo ``Wbar``.
    """

    W: LaurentPoly
    I: LaurentPoly  # noqa: E741
    II: LaurentPoly
    III_representative: LaurentPoly

    @property
    def Wbar(self) -> LaurentPoly:
        return self.W + self.W.substitute_inverse()

    @property
    def III(self) -> LaurentClass:
        return LaurentClass(self.III_representative, self.Wbar)


def _check_n(n, minimum):
    if int(n) < minimum:
        msg = f"The family is defined for n >= {minimum}, got {n}."
        raise ValueError(msg)
    return int(n)


def antireciprocal_family(n: int) -> ClosedForm:
    """
    Knots with ``W(t) = -W(t^-1)`` whose eight variants are mutually distinct.

    Defined for ``n >= 1``; ``Wbar`` vanishes and ``deg W = n + 1``.
    """
    n = _check_n(n, 1)
    W = _t(n + 1) - _t(1, n + 1) + _t(-1, n + 1) - _t(-n - 1)
    I = (  # noqa: E741
        -_t(n + 2)
        - _t(n + 1, n)
        + _t(1)
        - (2 * n - 1)
        - _t(-n - 1, n + 1)
        + _sum(_sym(i) for i in range(1, n + 1)) * 2
    )
    II = (
        -_sym(2 * n + 2)
        - _sym(n + 1)
        - _sym(n) * (2 * n + 1)
        - _sym(2) * (n * (n + 1))
        - _sym(1) * (2 * n + 3)
        + 2 * (n * n + n + 2)
        + _sum(_sym(i) for i in range(1, n + 2)) * 4
    )
    III = (
        -_sym(n + 1)
        - _sym(1) * (n + 1)
        + _sum(_sym(i) for i in range(1, n + 2)) * 2
        - 2 * n
    )
    return ClosedForm(W, I, II, III)


def nonreciprocal_family(n: int) -> ClosedForm:
    """
    Knots with ``W(t) != -W(t^-1)`` whose eight variants are mutually distinct.

    Defined for ``n >= 3``; ``deg W = n - 1``.
    """
    n = _check_n(n, 3)
    W = -_t(n - 1) + _t(1, n) - n + _t(-1)
    I = (  # noqa: E741
        -_t(n)
        + _t(n - 1, n - 2)
        - _sum(_t(i) for i in range(1, n - 1)) * 2
        + (2 * n - 1)
        - _t(-1, n)
    )
    II = (
        -_sym(n)
        + _sym(n - 1) * (n - 1)
        - _sum(_sym(i) for i in range(1, n - 1)) * 2
        - _sym(1) * (n * n - n + 1)
        + (2 * n * n - 2)
    )
    III = -_sum(_sym(i) for i in range(1, n - 1)) - _sym(1) + (2 * n - 2)
    return ClosedForm(W, I, II, III)


def first_bound_family(n: int) -> ClosedForm:
    """
    Knots with ``c = n + 3`` and ``vc = n + 2``, bounds reached by ``I`` alone.

    Defined for ``n >= 1``.
    """
    n = _check_n(n, 1)
    W = _t(n + 1) - _t(2) - _t(1, n) + (n + 1) - _t(-1)
    I = (  # noqa: E741
        -_t(n + 2)
        + _t(n + 1, n + 1)
        - _t(n)
        + _t(1, n + 1)
        - _sum(_t(i) for i in range(1, n + 1)) * 2
    )
    II = (
        _sym(n + 1) * n
        - _sym(1) * (n * n + n + 2)
        + 2 * (n * n + 2 * n + 2)
        - _sum(_sym(i) for i in range(1, n + 1)) * 2
    )
    III = _sym(2) * n - _sym(1) * 2 + 4 - _sum(_sym(i) for i in range(1, n + 1))
    return ClosedForm(W, I, II, III)


def second_bound_family(n: int) -> ClosedForm:
    """
    Knots with ``c = n + 3`` and ``vc = n + 2``, bounds reached by ``II`` alone.

    Defined for ``n >= 1``.
    """
    n = _check_n(n, 1)
    W = _t(n + 1) - _t(1, n) + (n - 1) - _t(-1) + _t(-2)
    I = (  # noqa: E741
        _t(n + 1, n - 1)
        + _t(1, 2 * n + 1)
        - (n + 1)
        - _t(-1, n - 2)
        + _t(-2, n - 1)
        - _sum(_t(i) for i in range(1, n + 1)) * 2
    )
    II = (
        _sym(n + 2)
        + _sym(n + 1) * (n - 2)
        + _sym(2) * (n - 1)
        - _sym(1) * (n * (n + 1))
        + 2 * (n * n + n + 2)
        - _sum(_sym(i) for i in range(1, n + 1))
        - _sum(_sym(i - 1) for i in range(1, n + 1))
    )
    III = -_sym(1) * n + 4 * n - _sum(_sym(i - 1) for i in range(1, n + 1))
    return ClosedForm(W, I, II, III)
