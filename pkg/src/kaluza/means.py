"""Two-term power means and the sharpness counterexample for Kaluza's condition.

Power means are evaluated in binary floating point.  Anything that decides
whether a reciprocal coefficient is positive is computed exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Sequence

from .errors import PreconditionError
from .generators import THM2_CONSTANT, thm2_coefficient
from .sequences import PropertyVerdict
from .series import TruncatedPowerSeries, as_rational, reciprocal

DEFAULT_TOLERANCE = 1e-10

# Digits as printed for 1/q(x) and the mean value in the original argument.
PRINTED_RECIPROCAL = ("0.50025", "-0.25025", "0.000062594")
PRINTED_MEAN = 1.00215


def _log_cosh(y: float) -> float:
    y = abs(y)
    if y > 20.0:
        return y - math.log(2.0) + math.log1p(math.exp(-2.0 * y))
    # cosh(y) - 1 = 2 sinh(y/2)^2 keeps full relative precision for small y.
    return math.log1p(2.0 * math.sinh(y / 2.0) ** 2)


def power_mean(a: float, b: float, t: float) -> float:
    """``((a^t + b^t) / 2) ** (1/t)`` for positive ``a, b, t``.

    Evaluated as ``sqrt(ab) * cosh(t d) ** (1/t)`` with ``d = (ln a - ln b) / 2``,
    which stays accurate as ``t`` approaches 0.
    """
    a, b, t = float(a), float(b), float(t)
    if not (a > 0 and b > 0 and t > 0):
        raise PreconditionError("power mean needs a, b, t > 0")
    la, lb = math.log(a), math.log(b)
    return math.exp((la + lb) / 2.0 + _log_cosh(t * (la - lb) / 2.0) / t)


def kaluza4_condition_check(
    seq: Sequence, t: float, tolerance: float = DEFAULT_TOLERANCE
) -> PropertyVerdict:
    """``a_n <= m(a_{n-1}, a_{n+1}, t) + tolerance`` for ``1 <= n <= len-2``."""
    a = [as_rational(v) for v in seq]
    for i, v in enumerate(a):
        if v <= 0:
            raise PreconditionError(f"entry {i} is not positive: {v}", i)
    last = len(a) - 2
    for n in range(1, last + 1):
        if float(a[n]) > power_mean(a[n - 1], a[n + 1], t) + tolerance:
            return PropertyVerdict(False, n, (a[n - 1], a[n], a[n + 1]), (1, last))
    return PropertyVerdict(True, checked_range=(1, last))


def round_significant(value: Fraction, digits: int) -> Decimal:
    """Round an exact rational to ``digits`` significant decimal digits (half-even)."""
    if value == 0:
        return Decimal(0)
    with localcontext() as ctx:
        ctx.prec = digits + 40
        exact = Decimal(value.numerator) / Decimal(value.denominator)
        ctx.prec = digits
        return +exact


def significant_digits(printed: str) -> int:
    digits = printed.lstrip("+-").replace(".", "").lstrip("0")
    return len(digits)


def matches_printed(value: Fraction, printed: str) -> bool:
    """Whether ``value`` rounds to ``printed`` at the precision ``printed`` shows."""
    return round_significant(value, significant_digits(printed)) == Decimal(printed)


@dataclass(frozen=True)
class Theorem2Report:
    series: TruncatedPowerSeries
    reciprocal: TruncatedPowerSeries
    t: Fraction
    mean_value: float
    condition: PropertyVerdict
    tolerance: float

    @property
    def q2(self) -> Fraction:
        return self.reciprocal[2]

    @property
    def q2_positive(self) -> bool:
        return self.q2 > 0

    @property
    def counterexample(self) -> bool:
        """Hypotheses hold on the prefix yet ``1/q`` has a positive coefficient."""
        return self.condition.holds and self.q2_positive

    def decimal_matches(self) -> list[tuple[str, str, bool]]:
        out = []
        for n, printed in enumerate(PRINTED_RECIPROCAL):
            got = round_significant(self.reciprocal[n], significant_digits(printed))
            out.append((printed, str(got), matches_printed(self.reciprocal[n], printed)))
        return out

    def to_dict(self) -> dict:
        return {
            "q0": str(self.series[0]),
            "t": str(self.t),
            "order": self.series.order,
            "reciprocal": self.reciprocal.to_dict(),
            "q2": str(self.q2),
            "q2_positive": self.q2_positive,
            "mean_value": self.mean_value,
            "condition": self.condition.to_dict(),
            "tolerance": self.tolerance,
            "counterexample": self.counterexample,
            "decimals": [
                {"printed": p, "computed": c, "match": ok} for p, c, ok in self.decimal_matches()
            ],
        }


def theorem2_verify(
    order: int = 4,
    q0: Fraction = THM2_CONSTANT,
    t: Fraction = Fraction(1, 100),
    tolerance: float = DEFAULT_TOLERANCE,
) -> Theorem2Report:
    """Check that ``q0 + sum x^n/n`` meets the power-mean condition yet fails Kaluza.

    The power-mean condition is tested on the prefix ``a_0 .. a_order`` in
    floating point; the sign of ``q_2`` is decided exactly.
    """
    if order < 4:
        raise PreconditionError("order must be at least 4")
    q0, t = as_rational(q0), as_rational(t)
    series = TruncatedPowerSeries(thm2_coefficient(n, q0) for n in range(order + 1))
    return Theorem2Report(
        series=series,
        reciprocal=reciprocal(series),
        t=t,
        mean_value=power_mean(q0, Fraction(1, 2), t),
        condition=kaluza4_condition_check(series.coeffs, float(t), tolerance),
        tolerance=tolerance,
    )
