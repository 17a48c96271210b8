"""Exact truncated Maclaurin series over the rationals.

Scalars are :class:`fractions.Fraction`, which is always kept in lowest
terms with a positive denominator, so equality of two series is plain
tuple equality.  A series of order ``N`` stores ``a_0 .. a_N``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Iterator, Union

from .errors import NonInvertibleError, OrderMismatchError, RationalParseError, SeriesError

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"``.  Decimal and exponent notation are rejected."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise RationalParseError(f"not a rational of the form p or p/q: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise RationalParseError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise RationalParseError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise RationalParseError(
        f"expected Fraction, int or 'p/q' string, got {type(value).__name__}"
    )


def format_rational(value: Fraction) -> str:
    """Canonical string form: ``"p"`` for integers, ``"p/q"`` otherwise."""
    return str(value)


@dataclass(frozen=True)
class TruncatedPowerSeries:
    """Coefficients ``a_0 .. a_N`` of a Maclaurin series truncated at order ``N``."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[RationalLike]):
        values = tuple(as_rational(c) for c in coeffs)
        if not values:
            raise SeriesError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "coeffs", values)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int) -> TruncatedPowerSeries:
        return cls([0] * (order + 1))

    @classmethod
    def unit(cls, order: int) -> TruncatedPowerSeries:
        return cls([1] + [0] * order)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __repr__(self) -> str:
        body = ", ".join(format_rational(c) for c in self.coeffs)
        return f"TruncatedPowerSeries([{body}])"

    def __add__(self, other: TruncatedPowerSeries) -> TruncatedPowerSeries:
        return linear_combine(1, self, 1, other)

    def __sub__(self, other: TruncatedPowerSeries) -> TruncatedPowerSeries:
        return linear_combine(1, self, -1, other)

    def __neg__(self) -> TruncatedPowerSeries:
        return TruncatedPowerSeries(-c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, TruncatedPowerSeries):
            return cauchy_product(self, other)
        k = as_rational(other)
        return TruncatedPowerSeries(k * c for c in self.coeffs)

    __rmul__ = __mul__

    def __truediv__(self, other: TruncatedPowerSeries) -> TruncatedPowerSeries:
        return quotient(self, other)

    # -- interchange format -------------------------------------------------

    def to_dict(self) -> dict:
        return {"order": self.order, "coeffs": [format_rational(c) for c in self.coeffs]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> TruncatedPowerSeries:
        try:
            order = data["order"]
            raw = data["coeffs"]
        except (KeyError, TypeError) as exc:
            raise SeriesError("series JSON needs 'order' and 'coeffs'") from exc
        if not isinstance(order, int) or isinstance(order, bool) or order < 0:
            raise SeriesError(f"order must be a non-negative integer, got {order!r}")
        if not isinstance(raw, list) or len(raw) != order + 1:
            raise SeriesError(f"expected {order + 1} coefficients for order {order}")
        return cls(raw)

    @classmethod
    def from_json(cls, text: str) -> TruncatedPowerSeries:
        return cls.from_dict(json.loads(text))


def _same_order(f: TruncatedPowerSeries, g: TruncatedPowerSeries) -> int:
    if f.order != g.order:
        raise OrderMismatchError(f"orders differ: {f.order} vs {g.order}")
    return f.order


def truncate(f: TruncatedPowerSeries, order: int) -> TruncatedPowerSeries:
    """Cut ``f`` down to ``order``, or pad it with zeros up to ``order``."""
    if order < 0:
        raise SeriesError("order must be non-negative")
    coeffs = list(f.coeffs[: order + 1])
    coeffs.extend([Fraction(0)] * (order + 1 - len(coeffs)))
    return TruncatedPowerSeries(coeffs)


def linear_combine(
    alpha: RationalLike, f: TruncatedPowerSeries, beta: RationalLike, g: TruncatedPowerSeries
) -> TruncatedPowerSeries:
    _same_order(f, g)
    alpha, beta = as_rational(alpha), as_rational(beta)
    return TruncatedPowerSeries(alpha * a + beta * b for a, b in zip(f.coeffs, g.coeffs))


def cauchy_product(f: TruncatedPowerSeries, g: TruncatedPowerSeries) -> TruncatedPowerSeries:
    n_max = _same_order(f, g)
    a, b = f.coeffs, g.coeffs
    return TruncatedPowerSeries(
        sum((a[k] * b[n - k] for k in range(n + 1)), Fraction(0)) for n in range(n_max + 1)
    )


def quotient(f: TruncatedPowerSeries, g: TruncatedPowerSeries) -> TruncatedPowerSeries:
    """Coefficients of ``f/g`` from ``q_n = (a_n - sum_{k<n} q_k b_{n-k}) / b_0``."""
    n_max = _same_order(f, g)
    a, b = f.coeffs, g.coeffs
    if b[0] == 0:
        raise NonInvertibleError("non-invertible series: zero constant term in divisor")
    q: list[Fraction] = []
    for n in range(n_max + 1):
        acc = a[n]
        for k in range(n):
            acc -= q[k] * b[n - k]
        q.append(acc / b[0])
    return TruncatedPowerSeries(q)


def reciprocal(g: TruncatedPowerSeries) -> TruncatedPowerSeries:
    """``1/g`` via ``q_0 = 1/b_0``, ``q_n = -(sum_{k=1}^n b_k q_{n-k}) / b_0``."""
    b = g.coeffs
    if b[0] == 0:
        raise NonInvertibleError("non-invertible series: zero constant term")
    q = [1 / b[0]]
    for n in range(1, g.order + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            acc += b[k] * q[n - k]
        q.append(-acc / b[0])
    return TruncatedPowerSeries(q)


def hadamard_product(f: TruncatedPowerSeries, g: TruncatedPowerSeries) -> TruncatedPowerSeries:
    _same_order(f, g)
    return TruncatedPowerSeries(a * b for a, b in zip(f.coeffs, g.coeffs))


def binomial_convolution(f: TruncatedPowerSeries, g: TruncatedPowerSeries) -> TruncatedPowerSeries:
    """``u_n = sum_k C(n,k) a_k b_{n-k}``."""
    n_max = _same_order(f, g)
    a, b = f.coeffs, g.coeffs
    return TruncatedPowerSeries(
        sum((comb(n, k) * a[k] * b[n - k] for k in range(n + 1)), Fraction(0))
        for n in range(n_max + 1)
    )


def _rising(x: Fraction, n: int) -> Fraction:
    out = Fraction(1)
    for i in range(n):
        out *= x + i
    return out


def davenport_polya_convolution(
    f: TruncatedPowerSeries,
    g: TruncatedPowerSeries,
    alpha: RationalLike,
    beta: RationalLike,
) -> TruncatedPowerSeries:
    """``v_n = sum_k (alpha,k)(beta,n-k) / (k!(n-k)!) a_k b_{n-k}`` with ``alpha+beta = 1``."""
    n_max = _same_order(f, g)
    alpha, beta = as_rational(alpha), as_rational(beta)
    if alpha <= 0 or beta <= 0:
        raise SeriesError("alpha and beta must be positive")
    if alpha + beta != 1:
        raise SeriesError(f"alpha + beta must equal 1, got {alpha + beta}")
    wa = [_rising(alpha, k) / factorial(k) for k in range(n_max + 1)]
    wb = [_rising(beta, k) / factorial(k) for k in range(n_max + 1)]
    a, b = f.coeffs, g.coeffs
    return TruncatedPowerSeries(
        sum((wa[k] * wb[n - k] * a[k] * b[n - k] for k in range(n + 1)), Fraction(0))
        for n in range(n_max + 1)
    )


def integrate_termwise(f: TruncatedPowerSeries) -> TruncatedPowerSeries:
    """Coefficients of ``(1/x) * integral_0^x f``, i.e. ``a_n / (n+1)``."""
    return TruncatedPowerSeries(a / (n + 1) for n, a in enumerate(f.coeffs))


def differentiate(f: TruncatedPowerSeries) -> TruncatedPowerSeries:
    # The derivative of an order-N truncation is only known to order N-1.
    if f.order < 1:
        raise SeriesError("cannot differentiate an order-0 truncation")
    return TruncatedPowerSeries((n + 1) * f.coeffs[n + 1] for n in range(f.order))


def power_rational(f: TruncatedPowerSeries, exponent: RationalLike) -> TruncatedPowerSeries:
    """``f**exponent`` for ``f`` with constant term 1.

    Uses the recurrence obtained from ``f g' = exponent * f' g``::

        n g_n = sum_{k=1}^{n} (exponent*k - (n-k)) f_k g_{n-k}
    """
    p = as_rational(exponent)
    a = f.coeffs
    if a[0] != 1:
        raise SeriesError("power_rational needs constant term exactly 1; normalize first")
    g = [Fraction(1)]
    for n in range(1, f.order + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            if a[k]:
                acc += (p * k - (n - k)) * a[k] * g[n - k]
        g.append(acc / n)
    return TruncatedPowerSeries(g)


def evaluate_partial_sum(f: TruncatedPowerSeries, x: RationalLike) -> Fraction:
    x = as_rational(x)
    total = Fraction(0)
    for c in reversed(f.coeffs):
        total = total * x + c
    return total
