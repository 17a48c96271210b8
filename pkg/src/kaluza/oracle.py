"""Brute-force cross-checks for the series arithmetic.

Nothing here calls into :mod:`kaluza.series` arithmetic; the only shared
pieces are :class:`fractions.Fraction` and the series container.  Products
and divisions go through explicitly assembled lower-triangular Toeplitz
matrices.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NonInvertibleError, SeriesError
from .series import TruncatedPowerSeries

MAX_ORDER = 64


def _toeplitz(g: TruncatedPowerSeries) -> list[list[Fraction]]:
    n = len(g.coeffs)
    return [[g.coeffs[i - j] if i >= j else Fraction(0) for j in range(n)] for i in range(n)]


def _forward_substitute(m: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    x: list[Fraction] = []
    for i, row in enumerate(m):
        if row[i] == 0:
            raise NonInvertibleError("singular triangular system: zero constant term")
        s = rhs[i]
        for j in range(i):
            s -= row[j] * x[j]
        x.append(s / row[i])
    return x


def _check_order(*series: TruncatedPowerSeries) -> None:
    orders = {s.order for s in series}
    if len(orders) != 1:
        raise SeriesError(f"orders differ: {sorted(orders)}")
    if orders.pop() > MAX_ORDER:
        raise SeriesError(f"oracle is capped at order {MAX_ORDER}")


def reciprocal_via_linear_solve(g: TruncatedPowerSeries) -> TruncatedPowerSeries:
    """Solve ``T(g) q = e_0`` where ``T(g)`` is the multiplication-by-``g`` matrix."""
    _check_order(g)
    rhs = [Fraction(1)] + [Fraction(0)] * g.order
    return TruncatedPowerSeries(_forward_substitute(_toeplitz(g), rhs))


def quotient_via_linear_solve(f: TruncatedPowerSeries, g: TruncatedPowerSeries) -> TruncatedPowerSeries:
    """Solve ``T(g) q = f``."""
    _check_order(f, g)
    return TruncatedPowerSeries(_forward_substitute(_toeplitz(g), list(f.coeffs)))


def _matmul_vec(m: list[list[Fraction]], v: list[Fraction]) -> list[Fraction]:
    return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in m]


def _int_power(f: TruncatedPowerSeries, k: int) -> list[Fraction]:
    acc = [Fraction(1)] + [Fraction(0)] * f.order
    t = _toeplitz(f)
    for _ in range(k):
        acc = _matmul_vec(t, acc)
    return acc


def power_identity_check(f: TruncatedPowerSeries, exponent, g: TruncatedPowerSeries) -> bool:
    """Whether ``g = f**(p/q)`` in the sense ``g^q = f^p`` (or ``g^q f^{-p} = 1`` for ``p < 0``)."""
    e = Fraction(exponent)
    _check_order(f, g)
    if f.coeffs[0] != 1 or g.coeffs[0] != 1:
        raise SeriesError("power identity check needs constant terms equal to 1")
    p, q = e.numerator, e.denominator
    lhs = _int_power(g, q)
    if p >= 0:
        return lhs == _int_power(f, p)
    unit = [Fraction(1)] + [Fraction(0)] * f.order
    return _matmul_vec(_toeplitz(TruncatedPowerSeries(lhs)), _int_power(f, -p)) == unit


def random_series(rng, order: int, nonzero_constant: bool = True) -> TruncatedPowerSeries:
    """Random rational series with small numerators and denominators."""

    def draw() -> Fraction:
        return Fraction(rng.randint(-9, 9), rng.randint(1, 9))

    coeffs = [draw() for _ in range(order + 1)]
    while nonzero_constant and coeffs[0] == 0:
        coeffs[0] = draw()
    return TruncatedPowerSeries(coeffs)
