"""Named example series and Gaussian hypergeometric coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable

from .errors import SeriesError
from .series import RationalLike, TruncatedPowerSeries, as_rational


def pochhammer(a: RationalLike, n: int) -> Fraction:
    """Rising factorial ``a (a+1) ... (a+n-1)``; equals 1 for ``n = 0``."""
    if n < 0:
        raise SeriesError("pochhammer index must be non-negative")
    a = as_rational(a)
    out = Fraction(1)
    for i in range(n):
        out *= a + i
    return out


@dataclass(frozen=True)
class HypergeomParams:
    a: Fraction
    b: Fraction
    c: Fraction

    def __init__(self, a: RationalLike, b: RationalLike, c: RationalLike):
        a, b, c = as_rational(a), as_rational(b), as_rational(c)
        if c <= 0 and c.denominator == 1:
            raise SeriesError(f"2F1 undefined: c = {c} is zero or a negative integer")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    def __iter__(self):
        return iter((self.a, self.b, self.c))


def gauss_2f1(params: HypergeomParams, order: int) -> TruncatedPowerSeries:
    """Coefficients ``(a,n)(b,n) / ((c,n) n!)`` of 2F1(a, b; c; x) up to ``order``.

    Built from the term ratio ``(a+n)(b+n) / ((c+n)(n+1))``; the closed
    form is kept as an independent check in the tests.
    """
    if not isinstance(params, HypergeomParams):
        params = HypergeomParams(*params)
    a, b, c = params
    coeffs = [Fraction(1)]
    for n in range(order):
        coeffs.append(coeffs[-1] * (a + n) * (b + n) / ((c + n) * (n + 1)))
    return TruncatedPowerSeries(coeffs)


def _f1(n: int) -> Fraction:
    return Fraction(2**n + 1, 2)


def _f2(n: int) -> Fraction:
    return Fraction(1, n + 1)


def _f3(n: int) -> Fraction:
    half = Fraction(1, 2)
    return pochhammer(half, n) ** 2 / (factorial(n) ** 2)


_F4_HEAD = (Fraction(1), Fraction(77, 80), Fraction(19, 20), Fraction(3, 2), Fraction(5, 2), Fraction(9, 2))


def _f4(n: int) -> Fraction:
    if n < len(_F4_HEAD):
        return _F4_HEAD[n]
    return Fraction(2 ** (n - 2) + 1, 2)


def _f5(n: int) -> Fraction:
    return Fraction(1) if n == 0 else Fraction(1, n)


def _even(rule: Callable[[int], Fraction]) -> Callable[[int], Fraction]:
    return lambda n: Fraction(0) if n % 2 else rule(n // 2)


THM2_CONSTANT = Fraction(1999, 1000)


def thm2_coefficient(n: int, q0: Fraction = THM2_CONSTANT) -> Fraction:
    """``q0 + sum_{n>=1} x^n / n``; the default constant is 1.999."""
    return q0 if n == 0 else Fraction(1, n)


NAMED_SERIES: dict[str, Callable[[int], Fraction]] = {
    "f1": _f1,
    "f2": _f2,
    "f3": _f3,
    "f4": _f4,
    "f5": _f5,
    "cosh": _even(lambda k: Fraction(1, factorial(2 * k))),
    "cos": _even(lambda k: Fraction((-1) ** k, factorial(2 * k))),
    "sinhc": _even(lambda k: Fraction(1, factorial(2 * k + 1))),
    "sinc": _even(lambda k: Fraction((-1) ** k, factorial(2 * k + 1))),
    "thm2q": thm2_coefficient,
}


def named_series(name: str, order: int) -> TruncatedPowerSeries:
    try:
        rule = NAMED_SERIES[name]
    except KeyError:
        known = ", ".join(sorted(NAMED_SERIES))
        raise SeriesError(f"unknown series {name!r}; known: {known}") from None
    if order < 0:
        raise SeriesError("order must be non-negative")
    return TruncatedPowerSeries(rule(n) for n in range(order + 1))
