"""
Compositional inverses
======================

For a regular series f (no constant term, nonzero x term) the inverse
g satisfies f(g(x)) = g(f(x)) = x.  The n-th coefficient of g is
(1/n) times the x^(n-1) coefficient of (x/f(x))^n.
"""

from lagrange_fps import (
    from_coeffs,
    lagrange_inverse,
    newton_inverse,
    series_arcsin,
    series_sin,
    series_tan,
    verify_inverse,
)

# x - x^2 inverts to the Catalan generating function (shifted by one).
f = from_coeffs([0, 1, -1] + [0] * 10)
g = lagrange_inverse(f)
print("inverse of x - x^2:", [int(c) for c in g.coeffs])
print("round trip holds  :", verify_inverse(f, g))

# The inverse of sin is arcsin.
n = 11
print("inverse(sin) == arcsin:", lagrange_inverse(series_sin(n)) == series_arcsin(n))
print("inverse(tan)          :", lagrange_inverse(series_tan(n)))

# Newton iteration reaches the same series by a different route,
# including when the linear coefficient is not 1.
h = from_coeffs([0, "3/2", 1, "-2/3", 0, 5, 0, 0])
print("Lagrange:", lagrange_inverse(h))
print("Newton  :", newton_inverse(h))
print("equal   :", lagrange_inverse(h) == newton_inverse(h))
