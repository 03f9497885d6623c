from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from lagrange_fps.errors import MalformedInputError, NotRegularError
from lagrange_fps.inversion import lagrange_inverse, newton_inverse, verify_inverse
from lagrange_fps.series_core import from_coeffs, identity

import oracles
from strategies import regular_series, small_rationals

INVERTERS = [lagrange_inverse, newton_inverse]


def catalan_series(n):
    return from_coeffs([0, 1, -1] + [0] * (n - 2))


@pytest.mark.parametrize("invert", INVERTERS)
class TestBothMethods:
    def test_identity(self, invert):
        for n in (1, 2, 7):
            assert invert(identity(n)) == identity(n)

    def test_catalan(self, invert):
        expected = [0] + oracles.catalan(5)
        assert expected == [0, 1, 1, 2, 5, 14]
        assert invert(catalan_series(5)) == from_coeffs(expected)

    def test_sin_gives_arcsin(self, invert):
        sin7 = from_coeffs(oracles.sin_coeffs(7))
        expected = oracles.taylor("asin(x)", 7)
        assert expected == [0, 1, 0, F(1, 6), 0, F(3, 40), 0, F(15, 336)]
        assert invert(sin7) == from_coeffs(expected)

    @pytest.mark.parametrize("coeffs", [[0, 0, 1], [1, 1, 0], [0, 0]])
    def test_rejects_non_regular(self, invert, coeffs):
        with pytest.raises(NotRegularError):
            invert(from_coeffs(coeffs))

    def test_non_unit_slope(self, invert):
        # 3/2 x + x^2 ; inverse from undetermined coefficients
        f = [F(0), F(3, 2), F(1), F(0), F(-2, 3), F(0), F(0)]
        assert invert(from_coeffs(f)) == from_coeffs(oracles.inverse_by_undetermined_coeffs(f, 6))

    @settings(max_examples=60)
    @given(regular_series(max_precision=9))
    def test_matches_undetermined_coefficients(self, invert, f):
        expected = oracles.inverse_by_undetermined_coeffs(list(f.coeffs), f.precision)
        assert invert(f) == from_coeffs(expected)


@settings(max_examples=80)
@given(regular_series(max_precision=12))
def test_methods_agree(f):
    assert lagrange_inverse(f) == newton_inverse(f)


@settings(max_examples=60)
@given(regular_series(max_precision=10))
def test_round_trip_and_involution(f):
    g = lagrange_inverse(f)
    assert g.precision == f.precision
    assert verify_inverse(f, g)
    assert verify_inverse(g, f)
    assert lagrange_inverse(g) == f


class TestVerifyInverse:
    def test_identity(self):
        assert verify_inverse(identity(1), identity(1))

    def test_sin(self):
        sin7 = from_coeffs(oracles.sin_coeffs(7))
        assert verify_inverse(sin7, lagrange_inverse(sin7))

    def test_wrong_pair(self):
        f = from_coeffs([0, 1, -1, 0])
        g = from_coeffs([0, 1, 1, 0])
        # f(g) = x + x^2 - (x + x^2)^2 = x - 2x^3 + ...
        assert oracles.brute_compose(list(f.coeffs), list(g.coeffs), 3)[3] == -2
        assert not verify_inverse(f, g)

    def test_precision_mismatch(self):
        with pytest.raises(MalformedInputError):
            verify_inverse(identity(2), identity(3))

    def test_non_regular_is_false(self):
        assert not verify_inverse(from_coeffs([1, 1]), identity(1))


@settings(max_examples=50)
@given(regular_series(precision=8), st.integers(min_value=2, max_value=8), small_rationals)
def test_dependence_law(f, m, new_value):
    # [x^n] f^{-1} only sees a_1..a_n
    coeffs = list(f.coeffs)
    coeffs[m] = new_value
    g = from_coeffs(coeffs)
    fi, gi = lagrange_inverse(f), lagrange_inverse(g)
    assert fi.coeffs[:m] == gi.coeffs[:m]


@settings(max_examples=50)
@given(regular_series(precision=8), st.integers(min_value=2, max_value=8), small_rationals)
def test_perturbation_law(f, k, delta):
    coeffs = list(f.coeffs)
    coeffs[1] = F(1)
    base = from_coeffs(coeffs)
    coeffs[k] += delta
    bumped = from_coeffs(coeffs)
    a, b = lagrange_inverse(base), lagrange_inverse(bumped)
    assert a.coeffs[:k] == b.coeffs[:k]
    assert b.coeffs[k] - a.coeffs[k] == -delta
