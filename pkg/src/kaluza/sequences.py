"""Structural properties of finite rational sequences.

Every checker certifies only the prefix it is given and reports the first
index at which the defining inequality fails.  Ratio comparisons are done by
cross-multiplication so no division ever happens on the compared values.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import PreconditionError, SeriesError
from .series import as_rational


@dataclass(frozen=True)
class PropertyVerdict:
    holds: bool
    witness_index: int | None = None
    witness_values: tuple[Fraction, ...] | None = None
    checked_range: tuple[int, int] | None = None

    def __post_init__(self):
        if self.holds != (self.witness_index is None):
            raise ValueError("a verdict has a witness exactly when it fails")

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "witness": self.witness_index,
            "witness_values": (
                None if self.witness_values is None else [str(v) for v in self.witness_values]
            ),
            "checked_range": None if self.checked_range is None else list(self.checked_range),
        }


PASS = PropertyVerdict(True)


def _fail(n: int, *values: Fraction, checked: tuple[int, int] | None = None) -> PropertyVerdict:
    return PropertyVerdict(False, n, tuple(values), checked)


def _rationals(seq: Sequence) -> list[Fraction]:
    return [as_rational(v) for v in seq]


def _require_positive(seq: list[Fraction], what: str) -> None:
    for i, v in enumerate(seq):
        if v <= 0:
            raise PreconditionError(f"{what} defined for positive sequences; entry {i} is {v}", i)


def _three_term(seq, from_index: int, strict: bool, convex: bool) -> PropertyVerdict:
    a = _rationals(seq)
    name = "log-convexity" if convex else "log-concavity"
    _require_positive(a, name)
    if len(a) < 3:
        raise SeriesError(f"{name} needs at least 3 terms")
    if from_index < 1:
        raise SeriesError("from_index must be >= 1")
    last = len(a) - 2
    for n in range(from_index, last + 1):
        sq, cross = a[n] * a[n], a[n - 1] * a[n + 1]
        if convex:
            ok = sq < cross if strict else sq <= cross
        else:
            ok = sq > cross if strict else sq >= cross
        if not ok:
            return _fail(n, a[n - 1], a[n], a[n + 1], checked=(from_index, last))
    return PropertyVerdict(True, checked_range=(from_index, last))


def is_log_convex(seq: Sequence, from_index: int = 1, strict: bool = False) -> PropertyVerdict:
    """``a_n^2 <= a_{n-1} a_{n+1}`` for ``from_index <= n <= len-2``.

    The witness values are ``(a_{n-1}, a_n, a_{n+1})`` at the first failure.
    """
    return _three_term(seq, from_index, strict, convex=True)


def is_log_concave(seq: Sequence, from_index: int = 1, strict: bool = False) -> PropertyVerdict:
    return _three_term(seq, from_index, strict, convex=False)


def _first_break(a: list[Fraction], start: int, increasing: bool, strict: bool) -> int | None:
    """First ``n > start`` where ``a[n-1] -> a[n]`` violates the requested monotonicity."""
    for n in range(start + 1, len(a)):
        lo, hi = (a[n - 1], a[n]) if increasing else (a[n], a[n - 1])
        if (lo >= hi) if strict else (lo > hi):
            return n
    return None


def is_monotone(seq: Sequence, increasing: bool = True, strict: bool = False) -> PropertyVerdict:
    a = _rationals(seq)
    n = _first_break(a, 0, increasing, strict)
    if n is None:
        return PropertyVerdict(True, checked_range=(0, len(a) - 1))
    return _fail(n, a[n - 1], a[n], checked=(0, len(a) - 1))


def _rise_then_fall(a: list[Fraction]) -> tuple[int, int | None]:
    """Peak index (end of the longest non-decreasing prefix) and first later rise."""
    peak = 0
    while peak + 1 < len(a) and a[peak] <= a[peak + 1]:
        peak += 1
    return peak, _first_break(a, peak, increasing=False, strict=False)


def is_unimodal(seq: Sequence) -> PropertyVerdict:
    a = _rationals(seq)
    if not a:
        raise SeriesError("unimodality needs at least one term")
    _, bad = _rise_then_fall(a)
    if bad is None:
        return PropertyVerdict(True, checked_range=(0, len(a) - 1))
    return _fail(bad, a[bad - 1], a[bad], checked=(0, len(a) - 1))


@dataclass(frozen=True)
class ShapeClass:
    """One of ``NonDecreasing``, ``NonIncreasing`` or ``ValleyAt`` with its index."""

    variant: str
    k: int | None = None

    def __str__(self) -> str:
        return f"ValleyAt({self.k})" if self.variant == "ValleyAt" else self.variant


NON_DECREASING = ShapeClass("NonDecreasing")
NON_INCREASING = ShapeClass("NonIncreasing")


def classify_shape(seq: Sequence) -> ShapeClass:
    """Sort a positive log-convex prefix into its monotonicity type.

    ``a_0 <= a_1`` forces a non-decreasing sequence.  Otherwise the sequence
    is non-increasing, or falls down to some ``a_k`` and rises from there;
    ``k`` is the first index with ``a_k <= a_{k+1}``.
    """
    a = _rationals(seq)
    _require_positive(a, "shape classification")
    if len(a) < 2 or a[0] <= a[1]:
        bad = _first_break(a, 0, increasing=True, strict=False)
        if bad is not None:
            raise PreconditionError("sequence is not log-convex: a_0 <= a_1 but it falls later", bad)
        return NON_DECREASING
    if _first_break(a, 0, increasing=False, strict=False) is None:
        return NON_INCREASING
    k = next(n for n in range(len(a) - 1) if a[n] <= a[n + 1])
    bad = _first_break(a, k, increasing=True, strict=False)
    if bad is not None:
        raise PreconditionError("sequence is not log-convex: it falls again after the valley", bad)
    return ShapeClass("ValleyAt", k)


def _ratio_cmp(a: list[Fraction], b: list[Fraction], i: int, j: int) -> int:
    """Sign of ``a_i/b_i - a_j/b_j`` using cross-multiplication (``b > 0``)."""
    lhs, rhs = a[i] * b[j], a[j] * b[i]
    return (lhs > rhs) - (lhs < rhs)


def _ratio_inputs(numer: Sequence, denom: Sequence) -> tuple[list[Fraction], list[Fraction]]:
    a, b = _rationals(numer), _rationals(denom)
    if len(a) != len(b):
        raise SeriesError(f"lengths differ: {len(a)} vs {len(b)}")
    for i, v in enumerate(b):
        if v <= 0:
            raise PreconditionError(f"denominator entry {i} is not positive: {v}", i)
    return a, b


@dataclass(frozen=True)
class RatioMonotonicity:
    increasing: PropertyVerdict
    decreasing: PropertyVerdict

    @property
    def direction(self) -> str:
        if self.increasing.holds and self.decreasing.holds:
            return "constant"
        if self.increasing.holds:
            return "increasing"
        if self.decreasing.holds:
            return "decreasing"
        return "neither"

    def to_dict(self) -> dict:
        return {
            "direction": self.direction,
            "increasing": self.increasing.to_dict(),
            "decreasing": self.decreasing.to_dict(),
        }


def ratio_monotonicity(numer: Sequence, denom: Sequence, strict: bool = False) -> RatioMonotonicity:
    a, b = _ratio_inputs(numer, denom)
    verdicts = []
    for sign in (1, -1):
        witness = None
        for n in range(1, len(a)):
            c = _ratio_cmp(a, b, n, n - 1) * sign
            if c < 0 or (strict and c == 0):
                witness = n
                break
        if witness is None:
            verdicts.append(PropertyVerdict(True, checked_range=(0, len(a) - 1)))
        else:
            n = witness
            verdicts.append(_fail(n, a[n - 1] / b[n - 1], a[n] / b[n], checked=(0, len(a) - 1)))
    return RatioMonotonicity(*verdicts)


def ratio_unimodal(numer: Sequence, denom: Sequence) -> tuple[PropertyVerdict, int]:
    """Whether ``a_n/b_n`` rises (weakly) to a peak and then falls (weakly).

    Returns the verdict and the peak index ``n0``; a monotone increasing
    ratio sequence peaks at its last index.
    """
    a, b = _ratio_inputs(numer, denom)
    ratios = [x / y for x, y in zip(a, b)]
    peak, bad = _rise_then_fall(ratios)
    if bad is None:
        return PropertyVerdict(True, checked_range=(0, len(a) - 1)), peak
    return _fail(bad, ratios[bad - 1], ratios[bad], checked=(0, len(a) - 1)), peak


def backward_difference(seq: Sequence) -> list[Fraction]:
    """``[a_0, a_1 - a_0, a_2 - a_1, ...]``."""
    a = _rationals(seq)
    return [a[0]] + [a[n] - a[n - 1] for n in range(1, len(a))]


def jurkat_condition(q: Sequence, p: Sequence, reversed: bool = False) -> PropertyVerdict:
    """Check ``Dq_n >= (q_0/p_0) Dp_n`` for ``n >= 1`` (``<=`` when ``reversed``).

    ``D`` is the backward difference.  ``p`` must start positive and be
    non-increasing; a violation raises :class:`PreconditionError`.
    """
    qs, ps = _rationals(q), _rationals(p)
    if len(qs) != len(ps):
        raise SeriesError(f"lengths differ: {len(qs)} vs {len(ps)}")
    if ps[0] <= 0:
        raise PreconditionError("p_0 must be positive", 0)
    bad = _first_break(ps, 0, increasing=False, strict=False)
    if bad is not None:
        raise PreconditionError(f"p is not non-increasing at index {bad}", bad)
    dq, dp = backward_difference(qs), backward_difference(ps)
    scale = qs[0] / ps[0]
    last = len(qs) - 1
    for n in range(1, last + 1):
        lhs, rhs = dq[n], scale * dp[n]
        if (lhs > rhs) if reversed else (lhs < rhs):
            return _fail(n, lhs, rhs, checked=(1, last))
    return PropertyVerdict(True, checked_range=(1, last))


def random_log_convex(rng: random.Random, length: int) -> list[Fraction]:
    """A positive log-convex rational sequence built from non-decreasing ratios.

    ``a_{n+1} = r_n a_n`` with ``r_0 <= r_1 <= ...``; a non-decreasing ratio
    sequence is the same thing as log-convexity for positive terms.
    """
    a = [Fraction(rng.randint(1, 10), rng.randint(1, 10))]
    r = Fraction(rng.randint(1, 10), rng.randint(1, 10))
    for _ in range(length - 1):
        a.append(a[-1] * r)
        if rng.random() < 0.5:
            r += Fraction(rng.randint(0, 3), rng.randint(1, 6))
    return a
