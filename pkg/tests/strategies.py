"""Hypothesis strategies for random truncated series."""

from fractions import Fraction

from hypothesis import strategies as st

from lagrange_fps.series_core import TruncatedPowerSeries

small_rationals = st.builds(
    Fraction,
    st.integers(min_value=-12, max_value=12),
    st.integers(min_value=1, max_value=7),
)


@st.composite
def series(draw, precision=None, min_precision=0, max_precision=8, constant_term=None):
    n = precision if precision is not None else draw(
        st.integers(min_value=min_precision, max_value=max_precision))
    coeffs = draw(st.lists(small_rationals, min_size=n + 1, max_size=n + 1))
    if constant_term is not None:
        coeffs[0] = Fraction(constant_term)
    return TruncatedPowerSeries(coeffs)


@st.composite
def regular_series(draw, precision=None, max_precision=8):
    n = precision if precision is not None else draw(st.integers(min_value=1, max_value=max_precision))
    coeffs = draw(st.lists(small_rationals, min_size=n + 1, max_size=n + 1))
    coeffs[0] = Fraction(0)
    coeffs[1] = draw(small_rationals.filter(bool))
    return TruncatedPowerSeries(coeffs)
