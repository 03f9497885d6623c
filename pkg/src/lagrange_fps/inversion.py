"""
Compositional inverse (reversion) of regular power series.

:func:`lagrange_inverse` is the primary method.  :func:`newton_inverse`
computes the same series by an unrelated route and is kept as a check.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import MalformedInputError, NotRegularError, PrecisionExceededError
from .series_core import (
    TruncatedPowerSeries,
    compose,
    derivative,
    identity,
    is_regular,
    mul,
    reciprocal,
    shift_down,
    shift_up,
    sub,
    truncate,
)

__all__ = ["lagrange_inverse", "newton_inverse", "verify_inverse"]


def _require_regular(f: TruncatedPowerSeries) -> None:
    if f.precision < 1:
        raise PrecisionExceededError("reversion needs precision >= 1")
    if not is_regular(f):
        raise NotRegularError(
            "series must have zero constant term and nonzero linear term to be inverted"
        )


def lagrange_inverse(f: TruncatedPowerSeries) -> TruncatedPowerSeries:
    """Reversion via ``[x^n] f^{-1} = (1/n) [x^(n-1)] (x/f(x))^n``.

    ``x/f(x)`` is the reciprocal of ``f`` shifted down one degree, a unit
    series of precision ``N - 1``.  Its powers are built up one factor at a
    time so that every coefficient ``1..N`` costs a single multiplication.

    >>> from lagrange_fps.series_core import from_coeffs
    >>> list(map(int, lagrange_inverse(from_coeffs([0, 1, -1, 0, 0, 0]))))
    [0, 1, 1, 2, 5, 14]
    """
    _require_regular(f)
    n_max = f.precision
    h = reciprocal(shift_down(f, 1))
    coeffs = [Fraction(0)]
    h_pow = h
    for n in range(1, n_max + 1):
        if n > 1:
            h_pow = mul(h_pow, h)
        coeffs.append(h_pow.coeffs[n - 1] / n)
    return TruncatedPowerSeries(coeffs)


def newton_inverse(f: TruncatedPowerSeries) -> TruncatedPowerSeries:
    """Reversion by Newton iteration ``g <- g - (f(g) - x) / f'(g)``.

    Starts from ``x / f1`` at precision 1 and doubles the number of known
    coefficients on every step.
    """
    _require_regular(f)
    target = f.precision
    g = TruncatedPowerSeries([0, 1 / f.coeffs[1]])
    if target == 1:
        return g
    df = derivative(f)
    known = 1
    while known < target:
        step = min(2 * known, target)
        # Current iterate padded with zeros is only an approximant; the
        # correction below fixes degrees known+1 .. step.
        g_pad = TruncatedPowerSeries(g.coeffs + (Fraction(0),) * (step - known))
        residual = sub(compose(truncate(f, step), g_pad), identity(step))
        # residual = x^(known+1) * r with r needed to precision step-known-1.
        rest = step - known - 1
        r = shift_down(residual, known + 1)
        slope = compose(truncate(df, rest), truncate(g_pad, rest))
        correction = shift_up(mul(r, reciprocal(slope)), known + 1)
        g = sub(g_pad, correction)
        known = step
    return g


def verify_inverse(f: TruncatedPowerSeries, g: TruncatedPowerSeries) -> bool:
    """True iff ``f(g(x)) = g(f(x)) = x`` through the shared precision."""
    if f.precision != g.precision:
        raise MalformedInputError(
            f"precision mismatch: {f.precision} vs {g.precision}"
        )
    if f.precision < 1 or f.coeffs[0] or g.coeffs[0]:
        return False
    x = identity(f.precision)
    return compose(f, g) == x and compose(g, f) == x
