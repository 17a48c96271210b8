"""Kaluza sign checks, hypergeometric criteria and quotient analysis.

All reports certify the checked truncation order only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import PreconditionError, SeriesError
from .generators import HypergeomParams, gauss_2f1
from .sequences import (
    PropertyVerdict,
    _first_break,
    _rise_then_fall,
    is_monotone,
    jurkat_condition,
    ratio_monotonicity,
    ratio_unimodal,
)
from .series import (
    RationalLike,
    TruncatedPowerSeries,
    as_rational,
    evaluate_partial_sum,
    quotient,
    reciprocal,
)


@dataclass(frozen=True)
class KaluzaReport:
    holds: bool
    first_positive_index: int | None
    reciprocal_prefix: TruncatedPowerSeries

    @property
    def order(self) -> int:
        return self.reciprocal_prefix.order

    def to_dict(self) -> dict:
        idx = self.first_positive_index
        return {
            "holds": self.holds,
            "witness": idx,
            "witness_value": None if idx is None else str(self.reciprocal_prefix[idx]),
            "order": self.order,
            "reciprocal": self.reciprocal_prefix.to_dict(),
        }


def kaluza_sign_check(f: TruncatedPowerSeries) -> KaluzaReport:
    """Scan ``1/f`` for a positive coefficient at index ``>= 1``."""
    if f[0] <= 0:
        raise PreconditionError("Kaluza sign check needs a positive constant term", 0)
    rec = reciprocal(f)
    first = next((n for n in range(1, rec.order + 1) if rec[n] > 0), None)
    return KaluzaReport(first is None, first, rec)


@dataclass(frozen=True)
class PredicateResult:
    holds: bool
    failed: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> dict:
        return {"holds": self.holds, "failed": list(self.failed)}


def _params(params) -> tuple[Fraction, Fraction, Fraction]:
    if isinstance(params, HypergeomParams):
        return params.a, params.b, params.c
    a, b, c = (as_rational(v) for v in params)
    return a, b, c


def _require_positive(**values: Fraction) -> None:
    for name, v in values.items():
        if v <= 0:
            raise PreconditionError(f"parameter {name} must be positive, got {v}")


def hyper1_predicate(params) -> PredicateResult:
    """``2ab(c+1) <= (a+1)(b+1)c`` and ``c >= a+b-1``: sufficient for a log-convex 2F1."""
    a, b, c = _params(params)
    _require_positive(a=a, b=b, c=c)
    failed = []
    if not 2 * a * b * (c + 1) <= (a + 1) * (b + 1) * c:
        failed.append("2ab(c+1) <= (a+1)(b+1)c")
    if not c >= a + b - 1:
        failed.append("c >= a+b-1")
    return PredicateResult(not failed, tuple(failed))


def hyper2_witness(params) -> Fraction:
    """Closed-form coefficient of ``x^2`` in ``1/2F1(a,b;c;x)``.

    ``(ab/c) (ab/c - (a+1)(b+1) / (2(c+1)))``; it is positive exactly when
    ``2ab(c+1) > (a+1)(b+1)c``, which rules out the Kaluza sign property.
    """
    a, b, c = _params(params)
    _require_positive(a=a, b=b, c=c)
    t = a * b / c
    return t * (t - (a + 1) * (b + 1) / (2 * (c + 1)))


def nonneg_reciprocal_predicate(params) -> PredicateResult:
    """Sufficient conditions for ``1/2F1(a,b;c;x)`` to have non-negative coefficients."""
    a, b, c = _params(params)
    if c == 0:
        raise PreconditionError("c must be non-zero")
    for name, v in (("a", a), ("b", b), ("c", c)):
        if v <= -1:
            raise PreconditionError(f"parameter {name} must exceed -1, got {v}")
    failed = []
    if not a * b / c <= 0:
        failed.append("ab/c <= 0")
    if not c <= a + b - 1:
        failed.append("c <= a+b-1")
    if not c <= a * b:
        failed.append("c <= ab")
    return PredicateResult(not failed, tuple(failed))


def propo_reciprocal_nonneg_check(f: TruncatedPowerSeries) -> PropertyVerdict:
    """For ``a_0 > 0 >= a_1 >= a_2 >= ...`` every coefficient of ``1/f`` is ``>= 0``."""
    a = f.coeffs
    if a[0] <= 0:
        raise PreconditionError("a_0 must be positive", 0)
    if f.order >= 1 and a[1] > 0:
        raise PreconditionError("a_1 must be non-positive", 1)
    bad = _first_break(list(a[1:]), 0, increasing=False, strict=False)
    if bad is not None:
        raise PreconditionError(f"coefficients rise at index {bad + 1}", bad + 1)
    rec = reciprocal(f)
    for n, v in enumerate(rec):
        if v < 0:
            return PropertyVerdict(False, n, (v,), (0, f.order))
    return PropertyVerdict(True, checked_range=(0, f.order))


Hyper6 = tuple[Fraction, Fraction, Fraction, Fraction, Fraction, Fraction]


def _six(params: Sequence[RationalLike]) -> Hyper6:
    vals = tuple(as_rational(v) for v in params)
    if len(vals) != 6:
        raise SeriesError("expected six parameters a1, b1, c1, a2, b2, c2")
    names = ("a1", "b1", "c1", "a2", "b2", "c2")
    _require_positive(**dict(zip(names, vals)))
    return vals  # type: ignore[return-value]


def _hyper4_conditions(a1, b1, c1, a2, b2, c2) -> dict[str, bool]:
    return {
        "cond1": a1 >= a2 and b1 >= b2 and c2 >= c1,
        "cond2": a1 + b1 >= a2 + b2 and c2 >= c1 and a2 <= a1 <= b1 <= b2,
        "cond3": a1 + b1 >= a2 + b2 and c2 >= c1 and a1 * b1 >= a2 * b2,
    }


def _hyper4_reversed(a1, b1, c1, a2, b2, c2) -> dict[str, bool]:
    return {
        "cond1": a1 <= a2 and b1 <= b2 and c2 <= c1,
        "cond2": a1 + b1 <= a2 + b2 and c2 <= c1 and a2 >= a1 >= b1 >= b2,
        "cond3": a1 + b1 <= a2 + b2 and c2 <= c1 and a1 * b1 <= a2 * b2,
    }


@dataclass(frozen=True)
class Hyper4Conditions:
    params: Hyper6
    satisfied: frozenset[str]
    reversed_satisfied: frozenset[str]

    @property
    def direction(self) -> str:
        # Forward conditions win when both hold (e.g. identical parameter sets).
        if self.satisfied:
            return "increasing"
        if self.reversed_satisfied:
            return "decreasing"
        return "none"

    def to_dict(self) -> dict:
        return {
            "params": [str(v) for v in self.params],
            "satisfied": sorted(self.satisfied),
            "reversed_satisfied": sorted(self.reversed_satisfied),
            "direction": self.direction,
        }


def hyper4_predicate(params: Sequence[RationalLike]) -> Hyper4Conditions:
    """Sufficient conditions for ``2F1(a1,b1;c1;x) / 2F1(a2,b2;c2;x)`` to be monotone on (0,1)."""
    p = _six(params)
    fwd = _hyper4_conditions(*p)
    rev = _hyper4_reversed(*p)
    return Hyper4Conditions(
        p,
        frozenset(k for k, v in fwd.items() if v),
        frozenset(k for k, v in rev.items() if v),
    )


def quo_polynomial(params: Sequence[RationalLike]) -> tuple[Fraction, Fraction, Fraction]:
    """Coefficients ``(A, B, C)`` of ``D(n) = (a1+n)(b1+n)(c2+n) - (a2+n)(b2+n)(c1+n)``."""
    a1, b1, c1, a2, b2, c2 = _six(params)
    A = (a1 + b1 + c2) - (a2 + b2 + c1)
    B = (a1 * b1 + a1 * c2 + b1 * c2) - (a2 * b2 + a2 * c1 + b2 * c1)
    C = a1 * b1 * c2 - a2 * b2 * c1
    return A, B, C


def _first_negative_decreasing(D, lo: int, hi: int) -> int:
    """Smallest n in [lo, hi] with D(n) < 0, given D(hi) < 0 and D non-increasing there."""
    while lo < hi:
        mid = (lo + hi) // 2
        if D(mid) < 0:
            hi = mid
        else:
            lo = mid + 1
    return lo


def quo_inequality_exact(params: Sequence[RationalLike]) -> PropertyVerdict:
    """Decide ``(a2+n)(b2+n)(c1+n) <= (a1+n)(b1+n)(c2+n)`` for every integer ``n >= 0``.

    The difference is the quadratic ``A n^2 + B n + C``; the decision is an
    exact case analysis on its shape, and a failure carries the smallest
    failing ``n`` with both sides of the inequality as witness values.
    """
    a1, b1, c1, a2, b2, c2 = _six(params)
    A, B, C = quo_polynomial((a1, b1, c1, a2, b2, c2))

    def D(n: int) -> Fraction:
        return (A * n + B) * n + C

    def failure(n: int) -> PropertyVerdict:
        lhs = (a2 + n) * (b2 + n) * (c1 + n)
        rhs = (a1 + n) * (b1 + n) * (c2 + n)
        return PropertyVerdict(False, n, (lhs, rhs))

    if C < 0:
        return failure(0)
    if A > 0:
        vertex = -B / (2 * A)
        if vertex <= 0:
            return PropertyVerdict(True)
        lo_n = vertex.numerator // vertex.denominator
        argmin = min((lo_n, lo_n + 1), key=D)
        if D(argmin) >= 0:
            return PropertyVerdict(True)
        return failure(_first_negative_decreasing(D, 0, argmin))
    if A == 0 and B >= 0:
        return PropertyVerdict(True)
    # Eventually decreasing (A < 0, or A == 0 with B < 0): D >= 0 on [0, root]
    # and < 0 beyond it, so the failures form a tail.  Grow until one is hit.
    hi = 1
    while D(hi) >= 0:
        hi *= 2
    return failure(_first_negative_decreasing(D, hi // 2, hi))


@dataclass(frozen=True)
class JurkatReport:
    verdict: PropertyVerdict
    hypothesis: PropertyVerdict
    quotient: TruncatedPowerSeries

    def to_dict(self) -> dict:
        return {
            **self.verdict.to_dict(),
            "hypothesis": self.hypothesis.to_dict(),
            "quotient": self.quotient.to_dict(),
        }


def _sign_scan(k: TruncatedPowerSeries, nonnegative: bool) -> PropertyVerdict:
    for n in range(1, k.order + 1):
        if (k[n] < 0) if nonnegative else (k[n] > 0):
            return PropertyVerdict(False, n, (k[n],), (1, k.order))
    return PropertyVerdict(True, checked_range=(1, k.order))


def jurkat_quotient_sign(
    q_series: TruncatedPowerSeries, p_series: TruncatedPowerSeries, expect: str = "nonnegative"
) -> JurkatReport:
    """Sign of the coefficients of ``q/p`` against the difference hypothesis.

    For ``expect="nonpositive"`` the numerator must be strictly decreasing,
    which the reversed statement needs to be correct.
    """
    if expect not in ("nonnegative", "nonpositive"):
        raise SeriesError("expect must be 'nonnegative' or 'nonpositive'")
    nonneg = expect == "nonnegative"
    if not nonneg:
        bad = is_monotone(q_series.coeffs, increasing=False, strict=True)
        if not bad.holds:
            raise PreconditionError(
                f"q must be strictly decreasing; fails at index {bad.witness_index}",
                bad.witness_index,
            )
    hypothesis = jurkat_condition(q_series.coeffs, p_series.coeffs, reversed=not nonneg)
    k = quotient(q_series, p_series)
    return JurkatReport(_sign_scan(k, nonneg), hypothesis, k)


@dataclass(frozen=True)
class QuotientMonotoneReport:
    coefficient_direction: str
    samples: tuple[Fraction, ...]
    values: tuple[Fraction, ...]
    sample_direction: str
    truncated: bool = True

    @property
    def agrees(self) -> bool:
        c, s = self.coefficient_direction, self.sample_direction
        if c == "neither":
            return True  # no prediction to contradict
        if c == "constant":
            return s == "constant"
        return s in (c, "constant")

    def to_dict(self) -> dict:
        return {
            "coefficient_direction": self.coefficient_direction,
            "sample_direction": self.sample_direction,
            "agrees": self.agrees,
            "samples": [str(x) for x in self.samples],
            "values": [str(v) for v in self.values],
            "note": "values are quotients of partial sums of the truncations",
        }


def _direction(values: Sequence[Fraction]) -> str:
    up = all(x <= y for x, y in zip(values, values[1:]))
    down = all(x >= y for x, y in zip(values, values[1:]))
    if up and down:
        return "constant"
    return "increasing" if up else "decreasing" if down else "neither"


def _truncated_quotient_values(numer, denom, points: Sequence[Fraction]) -> list[Fraction]:
    return [evaluate_partial_sum(numer, x) / evaluate_partial_sum(denom, x) for x in points]


def quotient_monotone_prediction(
    numer: TruncatedPowerSeries,
    denom: TruncatedPowerSeries,
    sample_points: Sequence[RationalLike],
) -> QuotientMonotoneReport:
    """Compare the coefficient-ratio prediction with sampled values of the quotient."""
    xs = [as_rational(x) for x in sample_points]
    if any(not 0 < x < 1 for x in xs):
        raise SeriesError("sample points must lie in (0, 1)")
    if any(x >= y for x, y in zip(xs, xs[1:])):
        raise SeriesError("sample points must be strictly increasing")
    prediction = ratio_monotonicity(numer.coeffs, denom.coeffs).direction
    values = _truncated_quotient_values(numer, denom, xs)
    return QuotientMonotoneReport(prediction, tuple(xs), tuple(values), _direction(values))


@dataclass(frozen=True)
class TurningPoint:
    x0: Fraction
    index: int
    verdict: PropertyVerdict
    flat: bool
    coefficient_peak: int
    approximate: bool = True
    values: tuple[Fraction, ...] = field(default=(), repr=False)

    def to_dict(self) -> dict:
        return {
            "x0": str(self.x0),
            "grid_index": self.index,
            "flat": self.flat,
            "coefficient_peak": self.coefficient_peak,
            "approximate": self.approximate,
            **self.verdict.to_dict(),
        }


def turning_point_locate(
    numer: TruncatedPowerSeries,
    denom: TruncatedPowerSeries,
    grid: Sequence[RationalLike],
) -> TurningPoint:
    """Grid estimate of where the quotient switches from rising to falling.

    Sampling only: the result is the grid point with the largest sampled
    value, and the verdict says whether the samples rise then fall.
    """
    xs = [as_rational(x) for x in grid]
    if not xs:
        raise SeriesError("grid must not be empty")
    if any(x <= 0 for x in xs) or any(x >= y for x, y in zip(xs, xs[1:])):
        raise SeriesError("grid must be positive and strictly increasing")
    pre, peak = ratio_unimodal(numer.coeffs, denom.coeffs)
    if not pre.holds:
        raise PreconditionError(
            f"coefficient ratios are not unimodal (index {pre.witness_index})", pre.witness_index
        )
    values = _truncated_quotient_values(numer, denom, xs)
    flat = all(v == values[0] for v in values)
    _, bad = _rise_then_fall(values)
    top = values.index(max(values))
    if bad is None:
        verdict = PropertyVerdict(True, checked_range=(0, len(xs) - 1))
    else:
        verdict = PropertyVerdict(False, bad, (values[bad - 1], values[bad]), (0, len(xs) - 1))
    return TurningPoint(xs[top], top, verdict, flat, peak, values=tuple(values))


def parity_reciprocal_check(even_coeffs: Sequence[RationalLike], order: int) -> PropertyVerdict:
    """Compare ``1/sum a_{2n} x^{2n}`` with ``1/sum (-1)^n a_{2n} x^{2n}``.

    Odd coefficients of both reciprocals must vanish and the even ones must
    agree up to the sign ``(-1)^n``.  The witness is the first index that
    breaks either relation.
    """
    evens = [as_rational(v) for v in even_coeffs]
    for i, v in enumerate(evens):
        if v <= 0:
            raise PreconditionError(f"even coefficient {i} is not positive: {v}", i)
    f = [Fraction(0)] * (order + 1)
    g = [Fraction(0)] * (order + 1)
    for k, v in enumerate(evens):
        if 2 * k > order:
            break
        f[2 * k] = v
        g[2 * k] = v if k % 2 == 0 else -v
    b = reciprocal(TruncatedPowerSeries(f))
    c = reciprocal(TruncatedPowerSeries(g))
    for n in range(order + 1):
        if n % 2:
            ok = b[n] == 0 and c[n] == 0
        else:
            ok = b[n] == (-1) ** (n // 2) * c[n]
        if not ok:
            return PropertyVerdict(False, n, (b[n], c[n]), (0, order))
    return PropertyVerdict(True, checked_range=(0, order))


def combined_theorem_check(params: Sequence[RationalLike], order: int) -> PropertyVerdict:
    """Sign of the coefficients of ``2F1(a1,b1;c1;x) / 2F1(a2,b2;c2;x)``.

    Needs a monotone direction from :func:`hyper4_predicate` and a
    log-convex denominator via the two denominator inequalities.  Checks
    ``q_n >= 0`` (increasing) or ``q_n <= 0`` (decreasing) for ``1 <= n <= order``.
    """
    p = _six(params)
    a1, b1, c1, a2, b2, c2 = p
    conds = hyper4_predicate(p)
    if conds.direction == "none":
        raise PreconditionError("none of the three monotonicity conditions holds, in either direction")
    if not 2 * a2 * b2 * (c2 + 1) <= (a2 + 1) * (b2 + 1) * c2:
        raise PreconditionError("denominator fails 2 a2 b2 (c2+1) <= (a2+1)(b2+1) c2")
    if not c2 >= a2 + b2 - 1:
        raise PreconditionError("denominator fails c2 >= a2+b2-1")
    q = quotient(
        gauss_2f1(HypergeomParams(a1, b1, c1), order),
        gauss_2f1(HypergeomParams(a2, b2, c2), order),
    )
    return _sign_scan(q, nonnegative=conds.direction == "increasing")
