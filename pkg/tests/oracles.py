"""Reference computations that share no code with lagrange_fps.

Series are plain lists of Fractions; everything is done the slow, obvious way.
"""

from fractions import Fraction
from math import factorial

import sympy


def poly_mul(a, b, n):
    out = [Fraction(0)] * (n + 1)
    for i, ai in enumerate(a[: n + 1]):
        for j, bj in enumerate(b[: n + 1 - i]):
            out[i + j] += ai * bj
    return out


def poly_pow(a, k, n):
    out = [Fraction(1)] + [Fraction(0)] * n
    for _ in range(k):
        out = poly_mul(out, a, n)
    return out


def brute_compose(f, g, n):
    """sum_i f_i * g^i, each power formed by repeated multiplication."""
    out = [Fraction(0)] * (n + 1)
    for i, fi in enumerate(f[: n + 1]):
        gi = poly_pow(g, i, n)
        for j in range(n + 1):
            out[j] += fi * gi[j]
    return out


def taylor(expr_text, n):
    """Maclaurin coefficients 0..n of a sympy expression in x."""
    x = sympy.Symbol("x")
    e = sympy.sympify(expr_text, locals={"x": x})
    s = sympy.series(e, x, 0, n + 1).removeO()
    return [Fraction(str(sympy.Rational(s.coeff(x, i)))) for i in range(n + 1)]


def catalan(count):
    """C_0..C_{count-1} from C_{n+1} = sum_i C_i C_{n-i}."""
    c = [1]
    while len(c) < count:
        m = len(c)
        c.append(sum(c[i] * c[m - 1 - i] for i in range(m)))
    return c


def inverse_by_undetermined_coeffs(f, n):
    """Solve f(g) = x degree by degree using brute-force composition."""
    g = [Fraction(0), 1 / f[1]]
    for d in range(2, n + 1):
        trial = g + [Fraction(0)]
        err = brute_compose(f, trial, d)[d]
        trial[d] = -err / f[1]
        g = trial
    return g


def sin_coeffs(n):
    return [Fraction(0) if i % 2 == 0 else Fraction((-1) ** (i // 2), factorial(i))
            for i in range(n + 1)]
