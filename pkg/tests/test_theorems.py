import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import F, S, positive_rationals
from kaluza.errors import PreconditionError
from kaluza.generators import HypergeomParams, gauss_2f1, named_series
from kaluza.sequences import ratio_monotonicity
from kaluza.series import TruncatedPowerSeries, reciprocal
from kaluza.theorems import (
    combined_theorem_check,
    hyper1_predicate,
    hyper2_witness,
    hyper4_predicate,
    jurkat_quotient_sign,
    kaluza_sign_check,
    nonneg_reciprocal_predicate,
    parity_reciprocal_check,
    propo_reciprocal_nonneg_check,
    quo_inequality_exact,
    quo_polynomial,
    quotient_monotone_prediction,
    turning_point_locate,
)


class TestKaluzaSignCheck:
    def test_f2(self):
        r = kaluza_sign_check(named_series("f2", 20))
        assert r.holds and r.first_positive_index is None and r.order == 20

    def test_f5(self):
        r = kaluza_sign_check(named_series("f5", 5))
        assert not r.holds and r.first_positive_index == 2
        assert r.reciprocal_prefix[2] == F(1, 2)

    def test_3_3_6(self):
        r = kaluza_sign_check(gauss_2f1(HypergeomParams(3, 3, 6), 5))
        assert r.first_positive_index == 2 and r.reciprocal_prefix[2] == F(15, 28)

    def test_non_positive_constant(self):
        with pytest.raises(PreconditionError):
            kaluza_sign_check(S(-1, 1))


class TestHyper1:
    def test_1_1_2(self):
        assert hyper1_predicate((1, 1, 2)).holds

    def test_half_half_one(self):
        assert hyper1_predicate((F(1, 2), F(1, 2), 1)).holds

    def test_3_3_6(self):
        r = hyper1_predicate((3, 3, 6))
        assert not r.holds and r.failed == ("2ab(c+1) <= (a+1)(b+1)c",)

    def test_second_condition(self):
        # 2*4*4*2 = 64 <= 5*5*1 = 25 fails too, and c = 1 < a+b-1 = 7
        assert hyper1_predicate((4, 4, 1)).failed == ("2ab(c+1) <= (a+1)(b+1)c", "c >= a+b-1")

    def test_non_positive(self):
        with pytest.raises(PreconditionError):
            hyper1_predicate((0, 1, 1))


class TestHyper2Witness:
    def test_3_3_6(self):
        assert hyper2_witness((3, 3, 6)) == F(15, 28)

    def test_1_1_2(self):
        assert hyper2_witness((1, 1, 2)) == F(-1, 12)

    def test_boundary(self):
        # a = b = 1: 2(c+1) = 4c gives c = 1
        assert 2 * 1 * 1 * (1 + 1) == (1 + 1) * (1 + 1) * 1
        assert hyper2_witness((1, 1, 1)) == 0

    @given(positive_rationals, positive_rationals, positive_rationals)
    def test_matches_recurrence(self, a, b, c):
        rec = reciprocal(gauss_2f1(HypergeomParams(a, b, c), 2))
        w = hyper2_witness((a, b, c))
        assert w == rec[2]
        assert (w > 0) == (2 * a * b * (c + 1) > (a + 1) * (b + 1) * c)


class TestNonnegReciprocal:
    @pytest.mark.parametrize("params", [(F(1, 4), F(1, 4), F(-3, 4)), (F(1, 2), F(1, 2), F(-1, 2))])
    def test_holds_and_scan(self, params):
        assert nonneg_reciprocal_predicate(params).holds
        rec = reciprocal(gauss_2f1(HypergeomParams(*params), 20))
        assert all(v >= 0 for v in rec)

    def test_1_1_2(self):
        r = nonneg_reciprocal_predicate((1, 1, 2))
        assert not r.holds and "ab/c <= 0" in r.failed

    @pytest.mark.parametrize("params", [(1, 1, 0), (-1, F(1, 2), F(1, 2)), (F(1, 2), F(1, 2), F(-3, 2))])
    def test_preconditions(self, params):
        with pytest.raises(PreconditionError):
            nonneg_reciprocal_predicate(params)


class TestPropo:
    def test_one_minus_x(self):
        # 1/(1-x) has all coefficients 1, but -1, 0, 0 is not non-increasing,
        # so the hypothesis itself is not met.
        assert reciprocal(S(1, -1, 0, 0, 0)) == S(1, 1, 1, 1, 1)
        with pytest.raises(PreconditionError) as exc:
            propo_reciprocal_nonneg_check(S(1, -1, 0, 0, 0))
        assert exc.value.witness == 2

    def test_constant_tail(self):
        assert propo_reciprocal_nonneg_check(S(1, -1, -1, -1, -1)).holds

    def test_by_hand(self):
        assert propo_reciprocal_nonneg_check(S(1, F(-1, 2), F(-1, 2))).holds
        assert reciprocal(S(1, F(-1, 2), F(-1, 2))) == S(1, F(1, 2), F(3, 4))

    def test_positive_a1(self):
        with pytest.raises(PreconditionError) as exc:
            propo_reciprocal_nonneg_check(S(1, F(1, 2), 0))
        assert exc.value.witness == 1

    def test_rising_tail(self):
        with pytest.raises(PreconditionError) as exc:
            propo_reciprocal_nonneg_check(S(1, -1, F(-1, 2)))
        assert exc.value.witness == 2


class TestHyper4:
    def test_cond1_forward(self):
        c = hyper4_predicate((2, 2, 1, 1, 1, 2))
        assert "cond1" in c.satisfied and c.direction == "increasing"

    def test_cond1_reversed(self):
        c = hyper4_predicate((1, 1, 2, 2, 2, 1))
        assert "cond1" in c.reversed_satisfied and not c.satisfied
        assert c.direction == "decreasing"

    def test_cond2(self):
        c = hyper4_predicate((1, F(7, 2), 1, F(1, 2), 4, 2))
        # a1 b1 = 7/2 >= a2 b2 = 2, so the product form holds as well
        assert c.satisfied == {"cond2", "cond3"} and c.direction == "increasing"

    def test_none(self):
        assert hyper4_predicate((1, 3, 1, 2, 2, 2)).direction == "none"

    def test_non_positive(self):
        with pytest.raises(PreconditionError):
            hyper4_predicate((1, 1, 1, 1, 1, 0))


def exhaustive_quo(params, n_max):
    a1, b1, c1, a2, b2, c2 = params
    for n in range(n_max + 1):
        if (a2 + n) * (b2 + n) * (c1 + n) > (a1 + n) * (b1 + n) * (c2 + n):
            return n
    return None


class TestQuoInequality:
    def test_polynomial(self):
        params = (2, 2, 2, 1, 1, 1)
        A, B, C = quo_polynomial(params)
        for n in range(6):
            assert (2 + n) * (2 + n) * (1 + n) - (1 + n) * (1 + n) * (2 + n) == A * n * n + B * n + C
        assert (A, B, C) == (1, 3, 2)
        assert quo_inequality_exact(params).holds

    def test_identical(self):
        p = (F(1, 3), 2, F(5, 2)) * 2
        assert quo_polynomial(p) == (0, 0, 0)
        assert quo_inequality_exact(p).holds

    def test_fails_at_zero(self):
        v = quo_inequality_exact((1, 1, 1, 2, 2, 2))
        assert not v.holds and v.witness_index == 0
        assert v.witness_values == (4, 2)

    def test_late_failure(self):
        # A = -1/10 < 0, so the failure sits far out.
        params = (10, 10, 1, F(101, 10), 10, 1)
        v = quo_inequality_exact(params)
        assert not v.holds
        assert exhaustive_quo(params, v.witness_index) == v.witness_index

    def test_convex_dip(self):
        # A > 0 but D dips below zero near the vertex.
        params = (F(1, 2), F(1, 2), F(1, 10), 5, 5, 10)
        A, B, C = quo_polynomial(params)
        assert A > 0 and C >= 0
        v = quo_inequality_exact(params)
        assert not v.holds and v.witness_index == 1
        assert exhaustive_quo(params, 1000) == 1

    @settings(max_examples=300)
    @given(st.lists(st.builds(Fraction, st.integers(1, 30), st.integers(1, 6)), min_size=6, max_size=6))
    def test_matches_exhaustive(self, params):
        v = quo_inequality_exact(params)
        found = exhaustive_quo(params, 400)
        if v.holds:
            assert found is None
        elif v.witness_index <= 400:
            assert found == v.witness_index
        else:
            assert found is None

    @settings(max_examples=80, deadline=None)
    @given(st.lists(st.builds(Fraction, st.integers(1, 12), st.integers(1, 4)), min_size=6, max_size=6))
    def test_equivalent_to_ratio_monotonicity(self, params):
        a1, b1, c1, a2, b2, c2 = params
        order = 15
        r = gauss_2f1(HypergeomParams(a1, b1, c1), order)
        s = gauss_2f1(HypergeomParams(a2, b2, c2), order)
        inc = ratio_monotonicity(r.coeffs, s.coeffs).increasing
        v = quo_inequality_exact(params)
        if v.holds or v.witness_index >= order:
            assert inc.holds
        else:
            assert inc.witness_index == v.witness_index + 1


class TestJurkatQuotientSign:
    def test_unit_numerator(self):
        p = S(2, 0, F(-1, 3), F(-1, 3), F(-1, 2))
        rep = jurkat_quotient_sign(TruncatedPowerSeries.unit(4), p)
        assert rep.hypothesis.holds and rep.verdict.holds
        assert all(v >= 0 for v in rep.quotient.coeffs[1:])

    def test_equal(self):
        p = S(3, 2, 1, F(1, 2))
        for expect in ("nonnegative", "nonpositive"):
            rep = jurkat_quotient_sign(p, p, expect)
            assert rep.verdict.holds and rep.quotient == S(1, 0, 0, 0)

    def test_requires_strict_decrease(self):
        with pytest.raises(PreconditionError):
            jurkat_quotient_sign(S(1, 1, 0), S(1, 0, 0), "nonpositive")

    def test_bad_expect(self):
        with pytest.raises(ValueError):
            jurkat_quotient_sign(S(1), S(1), "positive")

    @settings(max_examples=100, deadline=None)
    @given(st.integers(0, 2**32))
    def test_reversed_harness(self, seed):
        rng = random.Random(seed)
        n = rng.randint(2, 10)
        p = [Fraction(rng.randint(1, 9), rng.randint(1, 4))]
        for _ in range(n):
            p.append(p[-1] - Fraction(rng.randint(0, 5), rng.randint(1, 5)))
        q = [Fraction(rng.randint(-5, 9), rng.randint(1, 4))]
        scale = q[0] / p[0]
        for i in range(1, n + 1):
            slack = Fraction(rng.randint(1, 5), rng.randint(1, 5))
            q.append(q[-1] + scale * (p[i] - p[i - 1]) - slack)
        if not all(x > y for x, y in zip(q, q[1:])):
            return  # q0 < 0 can make the constructed q rise; not an instance
        rep = jurkat_quotient_sign(TruncatedPowerSeries(q), TruncatedPowerSeries(p), "nonpositive")
        assert rep.hypothesis.holds
        assert rep.verdict.holds


class TestQuotientMonotone:
    def test_f1_over_f2(self):
        f1, f2 = named_series("f1", 30), named_series("f2", 30)
        r = quotient_monotone_prediction(f1, f2, ["1/10", "2/10", "3/10"])
        assert r.coefficient_direction == "increasing"
        assert r.sample_direction == "increasing" and r.agrees

    def test_constant(self):
        f = named_series("f2", 10)
        r = quotient_monotone_prediction(f, f, [F(1, 10), F(1, 2)])
        assert r.sample_direction == "constant" and r.agrees

    def test_hypergeometric_cond1(self):
        num = gauss_2f1(HypergeomParams(2, 2, 1), 30)
        den = gauss_2f1(HypergeomParams(1, 1, 2), 30)
        r = quotient_monotone_prediction(num, den, [F(1, 10), F(1, 5), F(3, 10)])
        assert r.sample_direction == "increasing" and r.agrees

    @pytest.mark.parametrize("points", [[F(1, 2), F(1, 4)], [0, F(1, 2)], [F(1, 2), 1]])
    def test_bad_samples(self, points):
        f = named_series("f2", 5)
        with pytest.raises(ValueError):
            quotient_monotone_prediction(f, f, points)

    def test_non_positive_denominator(self):
        with pytest.raises(PreconditionError):
            quotient_monotone_prediction(S(1, 1), S(1, -1), [F(1, 2)])


class TestTurningPoint:
    grid = [F(k, 20) for k in range(1, 16)]

    def test_constructed_peak(self):
        rho = [1, 2, 3, 2] + [1] * 57
        den = TruncatedPowerSeries([1] * 61)
        num = TruncatedPowerSeries(rho)
        t = turning_point_locate(num, den, self.grid)
        assert t.verdict.holds and not t.flat and t.approximate
        assert t.coefficient_peak == 2
        assert 0 < t.index < len(self.grid) - 1
        assert t.values[t.index] == max(t.values)

    def test_flat(self):
        f = named_series("f2", 20)
        t = turning_point_locate(f, f, self.grid)
        assert t.flat and t.x0 == self.grid[0]

    def test_monotone(self):
        t = turning_point_locate(named_series("f1", 30), named_series("f2", 30), self.grid[:6])
        assert t.verdict.holds and t.x0 == self.grid[5]

    def test_not_unimodal(self):
        with pytest.raises(PreconditionError):
            turning_point_locate(S(1, 2, 1, 2), S(1, 1, 1, 1), self.grid)


class TestParity:
    def test_cosh_cos(self):
        from math import factorial

        evens = [Fraction(1, factorial(2 * k)) for k in range(6)]
        assert parity_reciprocal_check(evens, 10).holds

    def test_sinhc_sinc(self):
        from math import factorial

        evens = [Fraction(1, factorial(2 * k + 1)) for k in range(6)]
        assert parity_reciprocal_check(evens, 10).holds

    def test_single_term(self):
        assert parity_reciprocal_check([F(3, 7)], 0).holds
        assert parity_reciprocal_check([F(3, 7)], 6).holds

    def test_non_positive(self):
        with pytest.raises(PreconditionError):
            parity_reciprocal_check([1, 0, 1], 4)

    @given(st.lists(positive_rationals, min_size=1, max_size=15))
    def test_random(self, evens):
        assert parity_reciprocal_check(evens, 2 * len(evens) - 1).holds


class TestCombined:
    def test_increasing(self):
        assert combined_theorem_check((2, 2, 2, 1, 1, 2), 20).holds

    def test_identical(self):
        assert combined_theorem_check((1, 1, 2, 1, 1, 2), 10).holds

    def test_swapped_fails_denominator_hypothesis(self):
        with pytest.raises(PreconditionError, match="denominator"):
            combined_theorem_check((1, 1, 2, 2, 2, 2), 20)

    def test_decreasing(self):
        params = (F(1, 2), F(1, 2), 3, 1, 1, 2)
        assert hyper4_predicate(params).direction == "decreasing"
        assert combined_theorem_check(params, 20).holds
        from kaluza.series import quotient

        q = quotient(gauss_2f1((F(1, 2), F(1, 2), 3), 20), gauss_2f1((1, 1, 2), 20))
        assert all(v <= 0 for v in q.coeffs[1:])

    def test_no_direction(self):
        with pytest.raises(PreconditionError):
            combined_theorem_check((1, 3, 1, 2, 2, 2), 10)
