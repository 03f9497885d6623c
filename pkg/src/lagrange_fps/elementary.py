"""Exact Maclaurin series of the elementary functions used by the expression language."""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .series_core import TruncatedPowerSeries, mul, reciprocal

__all__ = [
    "series_sin",
    "series_cos",
    "series_tan",
    "series_exp",
    "series_log1p",
    "series_arctan",
    "series_arcsin",
    "GENERATORS",
]


def _odd(n, term):
    # term(k) is the coefficient of x^(2k+1)
    return TruncatedPowerSeries(
        term(i // 2) if i % 2 else Fraction(0) for i in range(n + 1)
    )


def series_sin(n: int) -> TruncatedPowerSeries:
    return _odd(n, lambda k: Fraction((-1) ** k, factorial(2 * k + 1)))


def series_cos(n: int) -> TruncatedPowerSeries:
    return TruncatedPowerSeries(
        Fraction(0) if i % 2 else Fraction((-1) ** (i // 2), factorial(i))
        for i in range(n + 1)
    )


def series_exp(n: int) -> TruncatedPowerSeries:
    return TruncatedPowerSeries(Fraction(1, factorial(i)) for i in range(n + 1))


def series_log1p(n: int) -> TruncatedPowerSeries:
    """``log(1 + x)``."""
    return TruncatedPowerSeries(
        Fraction(0) if i == 0 else Fraction((-1) ** (i - 1), i) for i in range(n + 1)
    )


def series_arctan(n: int) -> TruncatedPowerSeries:
    return _odd(n, lambda k: Fraction((-1) ** k, 2 * k + 1))


def series_tan(n: int) -> TruncatedPowerSeries:
    """``sin(x) * sec(x)``; the secant comes from :func:`reciprocal`."""
    return mul(series_sin(n), reciprocal(series_cos(n)))


def series_arcsin(n: int) -> TruncatedPowerSeries:
    """Binomial closed form ``C(2k, k) / (4**k (2k+1))`` at ``x**(2k+1)``."""
    return _odd(n, lambda k: Fraction(comb(2 * k, k), 4 ** k * (2 * k + 1)))


GENERATORS = {
    "sin": series_sin,
    "cos": series_cos,
    "tan": series_tan,
    "asin": series_arcsin,
    "atan": series_arctan,
    "exp": series_exp,
    "log1p": series_log1p,
}
