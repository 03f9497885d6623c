"""
Truncated power series with exact coefficients
==============================================

A series is stored with an explicit precision N: its coefficients of
x^0 .. x^N are exact rationals, and nothing is claimed past x^N.
"""

from fractions import Fraction

from lagrange_fps import (
    coefficient,
    compose,
    from_coeffs,
    mul,
    reciprocal,
    series_cos,
    series_sin,
    series_tan,
)
from lagrange_fps.errors import PrecisionExceededError

# Build sin(x) through x^7 and square it.
sin7 = series_sin(7)
print("sin      :", sin7)
print("sin^2    :", mul(sin7, sin7))

# Coefficients are canonical fractions.
print("from [2/4]:", from_coeffs([Fraction(2, 4)]))

# Reading past the precision is an error, never a silent zero.
try:
    coefficient(sin7, 8)
except PrecisionExceededError as exc:
    print("x^8 of sin7 ->", exc)

# Mixing precisions keeps the smaller one.
print("sin7 + sin3 has precision", (sin7 + series_sin(3)).precision)

# sec(x) = 1/cos(x) from the reciprocal recurrence, and the check cos * sec = 1.
sec6 = reciprocal(series_cos(6))
print("sec      :", sec6)
print("cos * sec:", mul(series_cos(6), sec6))

# Composition: sin(tan(x)) and tan(sin(x)) agree up to x^6.
st = compose(series_sin(8), series_tan(8))
ts = compose(series_tan(8), series_sin(8))
print("sin(tan x):", st)
print("tan(sin x):", ts)
print("difference:", st - ts)
