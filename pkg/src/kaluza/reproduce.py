"""Regenerate the worked coefficient tables and compare them with the printed values.

Rational tables are compared exactly.  Tables printed in decimal are
compared at the number of significant digits shown.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as F
from typing import Callable, Sequence

from . import generators, means, scan, sequences, series, theorems


@dataclass(frozen=True)
class TableResult:
    name: str
    passed: bool
    expected: str
    actual: str

    def line(self) -> str:
        if self.passed:
            return f"PASS  {self.name}"
        return f"FAIL  {self.name}: expected {self.expected}, got {self.actual}"


@dataclass(frozen=True)
class Table:
    name: str
    expected: object
    compute: Callable[[], object]
    compare: str = "exact"  # or "decimal"

    def run(self) -> TableResult:
        try:
            actual = self.compute()
        except Exception as exc:  # a crash is a failed table, not an aborted run
            return TableResult(self.name, False, _show(self.expected), f"error: {exc}")
        if self.compare == "decimal":
            ok = len(actual) == len(self.expected) and all(
                means.matches_printed(v, p) for v, p in zip(actual, self.expected)
            )
        else:
            ok = actual == self.expected
        return TableResult(self.name, ok, _show(self.expected), _show(actual))


def _show(value) -> str:
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(str(v) for v in value) + "]"
    return str(value)


def _coeffs(s: series.TruncatedPowerSeries, n: int | None = None) -> list[F]:
    return list(s.coeffs if n is None else s.coeffs[:n])


def _named(name: str, order: int) -> series.TruncatedPowerSeries:
    return generators.named_series(name, order)


def _recip_named(name: str, order: int = 10) -> list[F]:
    return _coeffs(series.reciprocal(_named(name, order)))


def _hyper(a, b, c, order):
    return generators.gauss_2f1(generators.HypergeomParams(a, b, c), order)


def _f4_sqrt() -> list[F]:
    return _coeffs(series.power_rational(_named("f4", 4), F(1, 2)))


def _f4_sqrt_not_log_convex() -> bool:
    a = _f4_sqrt()
    return a[3] ** 2 > a[2] * a[4]


def _f5_conditions() -> tuple[bool, bool]:
    a = _coeffs(_named("f5", 10))
    return sequences.is_log_convex(a).holds, sequences.is_log_convex(a, from_index=2).holds


def _power_scan_violations() -> int:
    rows = scan.scan_power(["f1", "f2", "f3"], scan.DEFAULT_ALPHA_GRID, 20)
    return len(scan.violations(rows))


def _thm2_mean_close() -> bool:
    return abs(means.theorem2_verify().mean_value - means.PRINTED_MEAN) <= 1e-4


_COSH = [F(1), 0, F(-1, 2), 0, F(5, 24), 0, F(-61, 720), 0, F(277, 8064), 0, F(-50521, 3628800)]
_SINHC = [F(1), 0, F(-1, 6), 0, F(7, 360), 0, F(-31, 15120), 0, F(127, 604800), 0, F(-73, 3421440)]


def _absolute(values: Sequence) -> list[F]:
    return [abs(F(v)) for v in values]


TABLES: list[Table] = [
    Table("parity/cosh-reciprocal", [F(v) for v in _COSH], lambda: _recip_named("cosh")),
    Table("parity/cos-reciprocal", _absolute(_COSH), lambda: _recip_named("cos")),
    Table("parity/sinhc-reciprocal", [F(v) for v in _SINHC], lambda: _recip_named("sinhc")),
    Table("parity/sinc-reciprocal", _absolute(_SINHC), lambda: _recip_named("sinc")),
    Table("shapes/f1-coefficients", [F(1), F(3, 2), F(5, 2), F(9, 2)], lambda: _coeffs(_named("f1", 3))),
    Table("shapes/f1-class", "NonDecreasing", lambda: str(sequences.classify_shape(_coeffs(_named("f1", 10))))),
    Table("shapes/f2-coefficients", [F(1), F(1, 2), F(1, 3), F(1, 4), F(1, 5)], lambda: _coeffs(_named("f2", 4))),
    Table("shapes/f2-class", "NonIncreasing", lambda: str(sequences.classify_shape(_coeffs(_named("f2", 10))))),
    Table("shapes/f3-coefficients", [F(1), F(1, 4), F(9, 64), F(25, 256)], lambda: _coeffs(_named("f3", 3))),
    Table("shapes/f3-hypergeometric", [F(1), F(1, 4), F(9, 64), F(25, 256)], lambda: _coeffs(_hyper(F(1, 2), F(1, 2), 1, 3))),
    Table("shapes/f3-class", "NonIncreasing", lambda: str(sequences.classify_shape(_coeffs(_named("f3", 10))))),
    Table("shapes/f4-class", "ValleyAt(2)", lambda: str(sequences.classify_shape(_coeffs(_named("f4", 10))))),
    Table(
        "calculus/f2-derivative",
        [F(1, 2), F(2, 3), F(3, 4), F(4, 5)],
        lambda: _coeffs(series.differentiate(_named("f2", 4))),
    ),
    Table(
        "calculus/f2-derivative-reciprocal",
        [F(2), F(-8, 3), F(5, 9)],
        lambda: _coeffs(series.reciprocal(series.differentiate(_named("f2", 3))), 3),
    ),
    Table(
        "calculus/f2-averaged-integral",
        [F(1), F(1, 4), F(1, 9), F(1, 16), F(1, 25)],
        lambda: _coeffs(series.integrate_termwise(_named("f2", 4))),
    ),
    Table("calculus/f2-kaluza", True, lambda: theorems.kaluza_sign_check(_named("f2", 20)).holds),
    Table(
        "calculus/f2-averaged-integral-kaluza",
        True,
        lambda: theorems.kaluza_sign_check(series.integrate_termwise(_named("f2", 20))).holds,
    ),
    Table(
        "products/reciprocal-f1-times-f2",
        [F(1), F(-2), F(5, 12), F(-1, 6)],
        lambda: _coeffs(series.reciprocal(series.cauchy_product(_named("f1", 3), _named("f2", 3)))),
    ),
    Table(
        "products/reciprocal-f2-over-f1",
        [F(1), F(1), F(5, 3), F(37, 12)],
        lambda: _coeffs(series.reciprocal(series.quotient(_named("f2", 3), _named("f1", 3)))),
    ),
    Table(
        "powers/reciprocal-f1-cubed",
        [F(1), F(-9, 2), F(6), F(-9, 4)],
        lambda: _coeffs(series.reciprocal(series.power_rational(_named("f1", 3), 3))),
    ),
    Table(
        "powers/reciprocal-f2-to-1.8",
        ["1", "-0.9", "0.03", "-0.009"],
        lambda: _coeffs(series.reciprocal(series.power_rational(_named("f2", 3), F(9, 5)))),
        compare="decimal",
    ),
    Table(
        "powers/f4-square-root",
        [F(1), F(77, 160), F(18391, 51200), F(4727893, 8192000), F(190367203, 209715200)],
        _f4_sqrt,
    ),
    Table("powers/f4-square-root-not-log-convex", True, _f4_sqrt_not_log_convex),
    Table("powers/alpha-grid-scan-violations", 0, _power_scan_violations),
    Table(
        "f5/reciprocal",
        [F(1), F(-1), F(1, 2), F(-1, 3)],
        lambda: _coeffs(series.reciprocal(_named("f5", 3))),
    ),
    Table("f5/log-convex-from-1-and-from-2", (False, True), _f5_conditions),
    Table("f5/kaluza-witness", 2, lambda: theorems.kaluza_sign_check(_named("f5", 5)).first_positive_index),
    Table(
        "hypergeometric/2f1-3-3-6",
        [F(1), F(3, 2), F(12, 7), F(25, 14), F(25, 14)],
        lambda: _coeffs(_hyper(3, 3, 6, 4)),
    ),
    Table(
        "hypergeometric/2f1-3-3-6-reciprocal",
        [F(1), F(-3, 2), F(15, 28), F(-1, 56)],
        lambda: _coeffs(series.reciprocal(_hyper(3, 3, 6, 3))),
    ),
    Table("hypergeometric/2f1-3-3-6-witness", F(15, 28), lambda: theorems.hyper2_witness((3, 3, 6))),
    Table(
        "thm2/reciprocal-decimals",
        list(means.PRINTED_RECIPROCAL),
        lambda: _coeffs(means.theorem2_verify().reciprocal, 3),
        compare="decimal",
    ),
    Table("thm2/q2-positive", True, lambda: means.theorem2_verify().q2_positive),
    Table("thm2/mean-condition-holds", True, lambda: means.theorem2_verify().condition.holds),
    Table("thm2/mean-value-1.00215", True, _thm2_mean_close),
]


def select(filters: Sequence[str] | None = None) -> list[Table]:
    if not filters:
        return list(TABLES)
    return [t for t in TABLES if any(f in t.name for f in filters)]


def reproduce_paper(filters: Sequence[str] | None = None) -> list[TableResult]:
    return [table.run() for table in select(filters)]
