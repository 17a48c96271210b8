from fractions import Fraction

import pytest
from hypothesis import strategies as st

from kaluza.series import TruncatedPowerSeries


def S(*coeffs):
    return TruncatedPowerSeries(coeffs)


def F(*args):
    return Fraction(*args)


small_rationals = st.builds(Fraction, st.integers(-12, 12), st.integers(1, 12))
positive_rationals = st.builds(Fraction, st.integers(1, 12), st.integers(1, 12))


@st.composite
def series_st(draw, max_order=12, unit_constant=False, nonzero_constant=False):
    order = draw(st.integers(0, max_order))
    coeffs = draw(st.lists(small_rationals, min_size=order + 1, max_size=order + 1))
    if unit_constant:
        coeffs[0] = Fraction(1)
    elif nonzero_constant and coeffs[0] == 0:
        coeffs[0] = draw(positive_rationals)
    return TruncatedPowerSeries(coeffs)


@pytest.fixture
def unit():
    return lambda n: TruncatedPowerSeries.unit(n)
