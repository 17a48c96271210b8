"""Command line front end.

Exit codes: 0 success, 1 a check failed, 2 usage or parse error,
3 a precondition of the requested operation does not hold.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction
from typing import Sequence

from . import generators, means, oracle, reproduce, scan, sequences, series, theorems
from .errors import PreconditionError, RationalParseError, SeriesError
from .series import TruncatedPowerSeries, parse_rational

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3
FALLBACK_ORDER = 10


class UsageError(Exception):
    pass


def default_order() -> int:
    raw = os.environ.get("FPS_DEFAULT_ORDER")
    if raw is None:
        return FALLBACK_ORDER
    try:
        order = int(raw)
    except ValueError:
        raise UsageError(f"FPS_DEFAULT_ORDER must be an integer, got {raw!r}") from None
    if order < 0:
        raise UsageError("FPS_DEFAULT_ORDER must be non-negative")
    return order


def _order(args) -> int:
    return args.order if args.order is not None else default_order()


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except RationalParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


def _rational_or_decimal(text: str) -> Fraction:
    """Exact rational from ``p/q`` or a decimal literal; used only by the mean commands."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _grid(text: str) -> list[Fraction]:
    try:
        return scan.parse_grid(text)
    except RationalParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _load(path: str | None, flag: str) -> TruncatedPowerSeries:
    if path is None:
        raise UsageError(f"{flag} is required")
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path) as fh:
                text = fh.read()
        return TruncatedPowerSeries.from_json(text)
    except (OSError, json.JSONDecodeError, SeriesError) as exc:
        raise UsageError(f"cannot read series from {path}: {exc}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _emit_json(obj, out: str | None) -> None:
    _emit(json.dumps(obj), out)


def _emit_series(s: TruncatedPowerSeries, args) -> None:
    fmt = getattr(args, "format", "json")
    if fmt == "json":
        text = s.to_json()
    elif fmt == "csv":
        text = "n,coeff\n" + "\n".join(f"{n},{c}" for n, c in enumerate(s.coeffs))
    else:
        width = len(str(s.order))
        text = "\n".join(f"x^{n:<{width}}  {c}" for n, c in enumerate(s.coeffs))
    _emit(text, args.out)


# -- subcommands ---------------------------------------------------------------


def cmd_generate(args) -> int:
    order = _order(args)
    if args.series:
        s = generators.named_series(args.series, order)
    elif args.hyper:
        s = generators.gauss_2f1(generators.HypergeomParams(*args.hyper), order)
    else:
        raise UsageError("give --series NAME or --hyper A B C")
    _emit_series(s, args)
    return EXIT_OK


def _need(value, flag: str):
    if value is None:
        raise UsageError(f"{flag} is required for this operation")
    return value


def cmd_op(args) -> int:
    f = _load(args.inp, "--in")
    name = args.operation
    if name in ("product", "quotient", "hadamard", "binom-conv", "dp-conv", "combine"):
        g = _load(args.in2, "--in2")
    if name == "product":
        out = series.cauchy_product(f, g)
    elif name == "quotient":
        out = series.quotient(f, g)
    elif name == "hadamard":
        out = series.hadamard_product(f, g)
    elif name == "binom-conv":
        out = series.binomial_convolution(f, g)
    elif name == "dp-conv":
        out = series.davenport_polya_convolution(f, g, _need(args.alpha, "--alpha"), _need(args.beta, "--beta"))
    elif name == "combine":
        out = series.linear_combine(_need(args.alpha, "--alpha"), f, _need(args.beta, "--beta"), g)
    elif name == "reciprocal":
        out = series.reciprocal(f)
    elif name == "power":
        out = series.power_rational(f, _need(args.exponent, "--exponent"))
    elif name == "integrate":
        out = series.integrate_termwise(f)
    elif name == "differentiate":
        out = series.differentiate(f)
    else:  # truncate
        out = series.truncate(f, _need(args.order, "--order"))
    _emit_series(out, args)
    return EXIT_OK


def _verdict_exit(holds: bool) -> int:
    return EXIT_OK if holds else EXIT_FAILED


def cmd_check(args) -> int:
    kind = args.kind
    if kind == "parity":
        values = _need(args.values, "--values")
        v = theorems.parity_reciprocal_check(values, _order(args))
        _emit_json(v.to_dict(), args.out)
        return _verdict_exit(v.holds)
    f = _load(args.inp, "--in")
    if kind == "kaluza":
        if args.order is not None:
            f = series.truncate(f, args.order)
        report = theorems.kaluza_sign_check(f)
        _emit_json(report.to_dict(), args.out)
        return _verdict_exit(report.holds)
    a = list(f.coeffs)
    if kind == "log-convex":
        v = sequences.is_log_convex(a, args.from_index, args.strict)
    elif kind == "log-concave":
        v = sequences.is_log_concave(a, args.from_index, args.strict)
    elif kind == "unimodal":
        v = sequences.is_unimodal(a)
    elif kind == "classify":
        shape = sequences.classify_shape(a)
        _emit_json({"holds": True, "witness": None, "class": str(shape)}, args.out)
        return EXIT_OK
    elif kind == "propo":
        v = theorems.propo_reciprocal_nonneg_check(f)
    else:
        b = list(_load(args.in2, "--in2").coeffs)
        if kind == "ratio":
            r = sequences.ratio_monotonicity(a, b, args.strict)
            _emit_json({"holds": r.direction != "neither", **r.to_dict()}, args.out)
            return _verdict_exit(r.direction != "neither")
        if kind == "ratio-unimodal":
            v, peak = sequences.ratio_unimodal(a, b)
            _emit_json({**v.to_dict(), "peak": peak}, args.out)
            return _verdict_exit(v.holds)
        # jurkat: series --in is q, --in2 is p
        v = sequences.jurkat_condition(a, b, reversed=args.reversed)
    _emit_json(v.to_dict(), args.out)
    return _verdict_exit(v.holds)


def _hyper3(args) -> tuple[Fraction, Fraction, Fraction]:
    return _need(args.a, "--a"), _need(args.b, "--b"), _need(args.c, "--c")


def _hyper6(args) -> tuple[Fraction, ...]:
    return (*_hyper3(args), _need(args.a2, "--a2"), _need(args.b2, "--b2"), _need(args.c2, "--c2"))


def cmd_predicate(args) -> int:
    kind = args.kind
    if kind == "hyper1":
        r = theorems.hyper1_predicate(_hyper3(args))
        _emit_json(r.to_dict(), args.out)
        return _verdict_exit(r.holds)
    if kind == "hyper2":
        w = theorems.hyper2_witness(_hyper3(args))
        # The predicate "fails Kaluza" holds when the witness is positive.
        _emit_json({"holds": w > 0, "witness_value": str(w)}, args.out)
        return _verdict_exit(w > 0)
    if kind == "nonneg":
        r = theorems.nonneg_reciprocal_predicate(_hyper3(args))
        _emit_json(r.to_dict(), args.out)
        return _verdict_exit(r.holds)
    if kind == "hyper4":
        c = theorems.hyper4_predicate(_hyper6(args))
        _emit_json({"holds": c.direction != "none", **c.to_dict()}, args.out)
        return _verdict_exit(c.direction != "none")
    if kind == "quo":
        params = _hyper6(args)
        v = theorems.quo_inequality_exact(params)
        A, B, C = theorems.quo_polynomial(params)
        _emit_json({**v.to_dict(), "polynomial": [str(A), str(B), str(C)]}, args.out)
        return _verdict_exit(v.holds)
    v = theorems.combined_theorem_check(_hyper6(args), _order(args))
    _emit_json(v.to_dict(), args.out)
    return _verdict_exit(v.holds)


def cmd_analyze(args) -> int:
    num, den = _load(args.num, "--num"), _load(args.den, "--den")
    if args.kind == "quotient":
        r = theorems.quotient_monotone_prediction(num, den, _need(args.samples, "--samples"))
        _emit_json(r.to_dict(), args.out)
        return _verdict_exit(r.agrees)
    t = theorems.turning_point_locate(num, den, _need(args.grid, "--grid"))
    _emit_json(t.to_dict(), args.out)
    return _verdict_exit(t.verdict.holds)


def cmd_mean(args) -> int:
    value = means.power_mean(args.a, args.b, args.t)
    _emit_json({"a": args.a, "b": args.b, "t": float(args.t), "mean": value}, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = means.theorem2_verify(args.order, args.q0, args.t, args.tol)
    _emit_json(report.to_dict(), args.out)
    return _verdict_exit(report.counterexample)


def cmd_scan(args) -> int:
    order = _order(args)
    if args.family == "hyper":
        rows = scan.scan_hyper(args.a or [], args.b or [], args.c or [], order, args.workers)
        columns = scan.HYPER_COLUMNS
    else:
        names = args.series.split(",") if args.series else ["f1", "f2", "f3"]
        for name in names:
            if name not in generators.NAMED_SERIES:
                raise UsageError(f"unknown series {name!r}")
        alphas = scan.DEFAULT_ALPHA_GRID if args.alpha is None else args.alpha
        rows = scan.scan_power(names, alphas, order, args.workers)
        columns = scan.POWER_COLUMNS
    if args.violations_only:
        rows = scan.violations(rows)
    _emit(scan.to_csv(rows, columns).rstrip("\n"), args.out)
    return EXIT_OK


def cmd_reproduce(args) -> int:
    results = reproduce.reproduce_paper(args.only)
    if not results:
        raise UsageError(f"no table matches {args.only}")
    for r in results:
        print(r.line())
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} tables passed")
    return EXIT_FAILED if failed else EXIT_OK


def cmd_selftest(args) -> int:
    rng = random.Random(args.seed)
    mismatches = []
    for i in range(args.count):
        order = rng.randint(0, args.max_order)
        f = oracle.random_series(rng, order, nonzero_constant=False)
        g = oracle.random_series(rng, order)
        if series.reciprocal(g) != oracle.reciprocal_via_linear_solve(g):
            mismatches.append({"case": i, "op": "reciprocal"})
        if series.quotient(f, g) != oracle.quotient_via_linear_solve(f, g):
            mismatches.append({"case": i, "op": "quotient"})
    _emit_json({"cases": args.count, "seed": args.seed, "mismatches": mismatches}, args.out)
    return EXIT_FAILED if mismatches else EXIT_OK


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kaluza", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("-o", "--out", help="write output to this file instead of stdout")

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["json", "csv", "table"], default="json")

    order = argparse.ArgumentParser(add_help=False)
    order.add_argument("--order", type=int, help="truncation order (default: $FPS_DEFAULT_ORDER or 10)")

    p = sub.add_parser("generate", parents=[out, fmt, order], help="named or 2F1 series")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--series", choices=sorted(generators.NAMED_SERIES))
    g.add_argument("--hyper", nargs=3, type=_rational, metavar=("A", "B", "C"))
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("op", parents=[out, fmt, order], help="series arithmetic")
    p.add_argument(
        "operation",
        choices=[
            "product", "reciprocal", "quotient", "hadamard", "binom-conv", "dp-conv",
            "combine", "power", "integrate", "differentiate", "truncate",
        ],
    )
    p.add_argument("--in", dest="inp", help="series JSON file ('-' for stdin)")
    p.add_argument("--in2", help="second series JSON file")
    p.add_argument("--alpha", type=_rational)
    p.add_argument("--beta", type=_rational)
    p.add_argument("--exponent", type=_rational)
    p.set_defaults(func=cmd_op)

    p = sub.add_parser("check", parents=[out, order], help="sequence and sign properties")
    p.add_argument(
        "kind",
        choices=[
            "log-convex", "log-concave", "unimodal", "classify", "ratio",
            "ratio-unimodal", "jurkat", "kaluza", "propo", "parity",
        ],
    )
    p.add_argument("--in", dest="inp")
    p.add_argument("--in2")
    p.add_argument("--from", dest="from_index", type=int, default=1)
    p.add_argument("--strict", action="store_true")
    p.add_argument("--reversed", action="store_true", help="jurkat: reversed inequality")
    p.add_argument("--values", type=_grid, help="parity: comma separated even-index coefficients")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("predicate", parents=[out, order], help="hypergeometric criteria")
    p.add_argument("kind", choices=["hyper1", "hyper2", "nonneg", "hyper4", "quo", "combined"])
    for name in ("a", "b", "c", "a2", "b2", "c2"):
        p.add_argument(f"--{name}", type=_rational)
    p.set_defaults(func=cmd_predicate)

    p = sub.add_parser("analyze", parents=[out], help="quotient monotonicity")
    p.add_argument("kind", choices=["quotient", "turning-point"])
    p.add_argument("--num", required=True)
    p.add_argument("--den", required=True)
    p.add_argument("--samples", type=_grid)
    p.add_argument("--grid", type=_grid)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("mean", parents=[out], help="power mean m(a, b, t)")
    p.add_argument("--a", type=_positive_float, required=True)
    p.add_argument("--b", type=_positive_float, required=True)
    p.add_argument("--t", type=_rational_or_decimal, required=True)
    p.set_defaults(func=cmd_mean)

    p = sub.add_parser("verify", parents=[out], help="power-mean counterexample")
    p.add_argument("target", choices=["thm2"])
    p.add_argument("--order", type=int, default=4)
    p.add_argument("--q0", type=_rational, default=generators.THM2_CONSTANT)
    p.add_argument("--t", type=_rational_or_decimal, default=Fraction(1, 100))
    p.add_argument("--tol", type=float, default=means.DEFAULT_TOLERANCE)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", parents=[out, order], help="grid scan for Kaluza violations (CSV)")
    p.add_argument("family", choices=["hyper", "power"])
    p.add_argument("--a", type=_grid)
    p.add_argument("--b", type=_grid)
    p.add_argument("--c", type=_grid)
    p.add_argument("--series", help="power: comma separated names (default f1,f2,f3)")
    p.add_argument("--alpha", type=_grid, help="power: exponents (default k/20 + 1/20, k=0..19)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--violations-only", action="store_true")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("reproduce-paper", help="regenerate the worked tables")
    p.add_argument("only", nargs="*", help="only tables whose name contains one of these")
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("selftest", parents=[out], help="fast path vs linear-solve oracle")
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-order", type=int, default=12)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RationalParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionError as exc:
        suffix = "" if exc.witness is None else f" (index {exc.witness})"
        print(f"precondition: {exc}{suffix}", file=sys.stderr)
        return EXIT_PRECONDITION
    except SeriesError as exc:
        print(f"precondition: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
