"""
Differences of series and of their inverses
===========================================

Take two distinct series f and g, both of the form x + a2 x^2 + ...
The first nonzero term of f - g is also the first nonzero term of
g^{-1} - f^{-1}: same degree, same coefficient.
"""

from lagrange_fps import (
    check_theorem2,
    compose,
    from_coeffs,
    lagrange_inverse,
    ord_lead,
    series_sin,
    series_tan,
)
from lagrange_fps.theorem import random_pair, run_trials

f, g = series_sin(9), series_tan(9)
print("ord/lead of sin - tan        :", ord_lead(f - g))
print("ord/lead of atan - asin      :", ord_lead(lagrange_inverse(g) - lagrange_inverse(f)))
print(check_theorem2(f, g))

# A pair that differs first at x^5.
f = from_coeffs([0, 1, 2, -1, 0, 3, 1])
g = from_coeffs([0, 1, 2, -1, 0, "7/2", -4])
r = check_theorem2(f, g)
print(f"k = {r.k_direct}, m = {r.m_direct}; inverse side k = {r.k_inverse}, m = {r.m_inverse}")

# Random pairs share a random prefix so that every order can occur.
f, g = random_pair(seed=11, n=8, coeff_bound=9)
print("random pair f:", f)
print("random pair g:", g)
print(check_theorem2(f, g))

summary = run_trials(200, seed=1, coeff_bound=9, min_order=4, max_order=12)
print(f"{summary.held}/{summary.trials} random pairs agree")

# The composed pair from Arnold's limit.
r = check_theorem2(compose(series_sin(8), series_tan(8)), compose(series_tan(8), series_sin(8)))
print("sin(tan) vs tan(sin):", r, "holds =", r.holds)
