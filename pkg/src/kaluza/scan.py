"""Grid scans for Kaluza sign violations, emitted as CSV rows."""

from __future__ import annotations

import csv
import io
import itertools
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import PreconditionError
from .generators import HypergeomParams, gauss_2f1, named_series
from .series import as_rational, power_rational
from .theorems import hyper1_predicate, hyper2_witness, kaluza_sign_check

HYPER_COLUMNS = ["a", "b", "c", "hyper1", "hyper2_witness", "holds", "witness_index", "witness_value"]
POWER_COLUMNS = ["series", "alpha", "holds", "witness_index", "witness_value"]

# alpha = 0.05 k + 0.05 for k = 0..19
DEFAULT_ALPHA_GRID = tuple(Fraction(k, 20) + Fraction(1, 20) for k in range(20))


def parse_grid(text: str) -> list[Fraction]:
    """Comma separated rationals; an empty string is an empty grid."""
    text = text.strip()
    if not text:
        return []
    return [as_rational(part.strip()) for part in text.split(",")]


def _verdict_columns(report) -> dict:
    idx = report.first_positive_index
    return {
        "holds": report.holds,
        "witness_index": "" if idx is None else idx,
        "witness_value": "" if idx is None else str(report.reciprocal_prefix[idx]),
    }


def _hyper_row(job: tuple[Fraction, Fraction, Fraction, int]) -> dict:
    a, b, c, order = job
    params = HypergeomParams(a, b, c)
    return {
        "a": str(a),
        "b": str(b),
        "c": str(c),
        "hyper1": hyper1_predicate(params).holds,
        "hyper2_witness": str(hyper2_witness(params)),
        **_verdict_columns(kaluza_sign_check(gauss_2f1(params, order))),
    }


def _power_row(job: tuple[str, Fraction, int]) -> dict:
    name, alpha, order = job
    g = power_rational(named_series(name, order), alpha)
    return {"series": name, "alpha": str(alpha), **_verdict_columns(kaluza_sign_check(g))}


def _run(fn: Callable, jobs: list, workers: int) -> list[dict]:
    # Executor.map yields in submission order, so output order is the grid order.
    if workers <= 1 or len(jobs) < 2:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, jobs, chunksize=max(1, len(jobs) // (4 * workers))))


def scan_hyper(
    a_values: Sequence[Fraction],
    b_values: Sequence[Fraction],
    c_values: Sequence[Fraction],
    order: int,
    workers: int = 1,
) -> list[dict]:
    jobs = [(a, b, c, order) for a, b, c in itertools.product(a_values, b_values, c_values)]
    for a, b, c, _ in jobs:
        if min(a, b, c) <= 0:
            raise PreconditionError(f"hyper scan needs positive parameters, got ({a}, {b}, {c})")
    return _run(_hyper_row, jobs, workers)


def scan_power(
    names: Sequence[str], alphas: Iterable[Fraction], order: int, workers: int = 1
) -> list[dict]:
    jobs = [(name, alpha, order) for name in names for alpha in alphas]
    return _run(_power_row, jobs, workers)


def violations(rows: Iterable[dict]) -> list[dict]:
    return [r for r in rows if not r["holds"]]


def to_csv(rows: Iterable[dict], columns: Sequence[str]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: (str(v).lower() if isinstance(v, bool) else v) for k, v in row.items()})
    return buf.getvalue()
