"""
Truncated formal power series with exact rational coefficients.

A :class:`TruncatedPowerSeries` stores the coefficients of ``x**0 .. x**N``
where ``N`` is its *precision*; everything beyond ``x**N`` is unknown.  Binary
operations return a result whose precision is the smaller of the operand
precisions, and reading a coefficient past the precision raises
:class:`PrecisionExceededError` instead of returning zero.

Coefficients are :class:`fractions.Fraction`, which is always kept in lowest
terms with a positive denominator.

>>> f = from_coeffs([0, 1, 0, Fraction(-1, 6)])
>>> f * f
TruncatedPowerSeries([0, 0, 1, 0])
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

from .errors import (
    MalformedInputError,
    NotComposableError,
    NotInvertibleError,
    PrecisionExceededError,
)

__all__ = [
    "Fraction",
    "TruncatedPowerSeries",
    "from_coeffs",
    "constant",
    "identity",
    "monomial",
    "zero",
    "coefficient",
    "add",
    "sub",
    "neg",
    "scale",
    "mul",
    "reciprocal",
    "compose",
    "derivative",
    "integrate",
    "power",
    "is_regular",
    "truncate",
    "shift_down",
    "shift_up",
    "format_rational",
]

RationalLike = Union[int, Fraction, str, Rational]


def _as_fraction(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise MalformedInputError(f"not a rational coefficient: {value!r}")
    if isinstance(value, (int, str, Rational)):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise MalformedInputError(f"not a rational coefficient: {value!r}") from exc
    raise MalformedInputError(
        f"coefficients must be exact rationals, got {type(value).__name__}"
    )


def format_rational(q: Fraction) -> str:
    """Canonical text form ``p/q``; the denominator is omitted when it is 1."""
    return str(q)


class TruncatedPowerSeries:
    """Immutable power series known exactly up to ``x**precision``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike]):
        data = tuple(_as_fraction(c) for c in coeffs)
        if not data:
            raise MalformedInputError("a series needs at least one coefficient")
        self._coeffs = data

    @classmethod
    def _raw(cls, coeffs: tuple) -> "TruncatedPowerSeries":
        # Internal constructor for tuples already made of Fractions.
        obj = cls.__new__(cls)
        obj._coeffs = coeffs
        return obj

    @property
    def precision(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def __len__(self):
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __getitem__(self, n: int) -> Fraction:
        return coefficient(self, n)

    def __eq__(self, other):
        if not isinstance(other, TruncatedPowerSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        body = ", ".join(format_rational(c) for c in self._coeffs)
        return f"TruncatedPowerSeries([{body}])"

    def __str__(self):
        return format_series(self)

    def __add__(self, other):
        other = _coerce(other, self.precision)
        return add(self, other) if other is not None else NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other, self.precision)
        return sub(self, other) if other is not None else NotImplemented

    def __rsub__(self, other):
        other = _coerce(other, self.precision)
        return sub(other, self) if other is not None else NotImplemented

    def __mul__(self, other):
        if isinstance(other, TruncatedPowerSeries):
            return mul(self, other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return scale(other, self)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return neg(self)

    def __pow__(self, k: int):
        return power(self, k)

    def __call__(self, inner: "TruncatedPowerSeries") -> "TruncatedPowerSeries":
        return compose(self, inner)

    def is_zero(self) -> bool:
        return not any(self._coeffs)


def _coerce(value, precision):
    if isinstance(value, TruncatedPowerSeries):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return constant(value, precision)
    return None


def format_series(f: TruncatedPowerSeries) -> str:
    """Coefficient list, lowest degree first: ``[0, 1, 0, -1/6]``."""
    return "[" + ", ".join(format_rational(c) for c in f.coeffs) + "]"


# -- constructors ----------------------------------------------------------

def from_coeffs(coeffs: Sequence[RationalLike]) -> TruncatedPowerSeries:
    """Build a series of precision ``len(coeffs) - 1``."""
    return TruncatedPowerSeries(coeffs)


def zero(precision: int) -> TruncatedPowerSeries:
    _check_precision(precision)
    return TruncatedPowerSeries._raw((Fraction(0),) * (precision + 1))


def constant(c: RationalLike, precision: int) -> TruncatedPowerSeries:
    _check_precision(precision)
    return TruncatedPowerSeries._raw((_as_fraction(c),) + (Fraction(0),) * precision)


def monomial(c: RationalLike, degree: int, precision: int) -> TruncatedPowerSeries:
    """``c * x**degree`` known up to ``x**precision`` (vanishes if degree > precision)."""
    _check_precision(precision)
    coeffs = [Fraction(0)] * (precision + 1)
    if degree <= precision:
        coeffs[degree] = _as_fraction(c)
    return TruncatedPowerSeries._raw(tuple(coeffs))


def identity(precision: int) -> TruncatedPowerSeries:
    """The series ``x``."""
    if precision < 1:
        raise MalformedInputError("the identity series needs precision >= 1")
    return monomial(1, 1, precision)


def _check_precision(precision):
    if not isinstance(precision, int) or precision < 0:
        raise MalformedInputError(f"precision must be a nonnegative integer, got {precision!r}")


# -- access ----------------------------------------------------------------

def coefficient(f: TruncatedPowerSeries, n: int) -> Fraction:
    """Return ``[x**n] f``."""
    if n < 0:
        raise MalformedInputError(f"negative coefficient index {n}")
    if n > f.precision:
        raise PrecisionExceededError(
            f"coefficient of x^{n} requested but series is known only to x^{f.precision}"
        )
    return f.coeffs[n]


def truncate(f: TruncatedPowerSeries, precision: int) -> TruncatedPowerSeries:
    """Forget coefficients above ``x**precision``.  Cannot raise precision."""
    if precision > f.precision:
        raise PrecisionExceededError(
            f"cannot raise precision from {f.precision} to {precision}"
        )
    _check_precision(precision)
    return TruncatedPowerSeries._raw(f.coeffs[: precision + 1])


def shift_down(f: TruncatedPowerSeries, s: int) -> TruncatedPowerSeries:
    """Divide by ``x**s``; the first ``s`` coefficients must vanish."""
    if s > f.precision:
        raise PrecisionExceededError(f"cannot divide a precision-{f.precision} series by x^{s}")
    if any(f.coeffs[:s]):
        raise MalformedInputError(f"series is not divisible by x^{s}")
    return TruncatedPowerSeries._raw(f.coeffs[s:])


def shift_up(f: TruncatedPowerSeries, s: int) -> TruncatedPowerSeries:
    """Multiply by ``x**s``; the precision grows by ``s``."""
    return TruncatedPowerSeries._raw((Fraction(0),) * s + f.coeffs)


# -- ring operations -------------------------------------------------------

def add(f: TruncatedPowerSeries, g: TruncatedPowerSeries) -> TruncatedPowerSeries:
    n = min(f.precision, g.precision) + 1
    return TruncatedPowerSeries._raw(tuple(a + b for a, b in zip(f.coeffs[:n], g.coeffs[:n])))


def sub(f: TruncatedPowerSeries, g: TruncatedPowerSeries) -> TruncatedPowerSeries:
    n = min(f.precision, g.precision) + 1
    return TruncatedPowerSeries._raw(tuple(a - b for a, b in zip(f.coeffs[:n], g.coeffs[:n])))


def neg(f: TruncatedPowerSeries) -> TruncatedPowerSeries:
    return TruncatedPowerSeries._raw(tuple(-a for a in f.coeffs))


def scale(c: RationalLike, f: TruncatedPowerSeries) -> TruncatedPowerSeries:
    c = _as_fraction(c)
    return TruncatedPowerSeries._raw(tuple(c * a for a in f.coeffs))


def _mul_coeffs(a: Sequence[Fraction], b: Sequence[Fraction], n: int) -> tuple:
    # Cauchy product, first n coefficients; skips zero entries of a.
    out = [Fraction(0)] * n
    for i in range(min(n, len(a))):
        ai = a[i]
        if not ai:
            continue
        for j in range(min(n - i, len(b))):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return tuple(out)


def mul(f: TruncatedPowerSeries, g: TruncatedPowerSeries) -> TruncatedPowerSeries:
    """Cauchy product truncated to the smaller precision."""
    n = min(f.precision, g.precision) + 1
    return TruncatedPowerSeries._raw(_mul_coeffs(f.coeffs, g.coeffs, n))


def reciprocal(f: TruncatedPowerSeries) -> TruncatedPowerSeries:
    """Multiplicative inverse ``1/f``; requires a nonzero constant term."""
    a = f.coeffs
    if not a[0]:
        raise NotInvertibleError("series with zero constant term has no reciprocal")
    inv_a0 = 1 / a[0]
    b = [inv_a0]
    for n in range(1, len(a)):
        acc = Fraction(0)
        for i in range(1, n + 1):
            if a[i]:
                acc += a[i] * b[n - i]
        b.append(-inv_a0 * acc)
    return TruncatedPowerSeries._raw(tuple(b))


def compose(f: TruncatedPowerSeries, g: TruncatedPowerSeries) -> TruncatedPowerSeries:
    """``f(g(x))`` for ``g`` without constant term, by Horner's rule."""
    if g.coeffs[0]:
        raise NotComposableError("inner series must have zero constant term")
    n = min(f.precision, g.precision) + 1
    gc = g.coeffs[:n]
    acc = [Fraction(0)] * n
    for c in reversed(f.coeffs[:n]):
        acc = list(_mul_coeffs(acc, gc, n))
        acc[0] += c
    return TruncatedPowerSeries._raw(tuple(acc))


def power(f: TruncatedPowerSeries, k: int) -> TruncatedPowerSeries:
    """``f**k`` by repeated squaring, truncated at ``f.precision``."""
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise MalformedInputError(f"exponent must be a nonnegative integer, got {k!r}")
    result = constant(1, f.precision)
    base = f
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


# -- calculus --------------------------------------------------------------

def derivative(f: TruncatedPowerSeries) -> TruncatedPowerSeries:
    if f.precision == 0:
        raise PrecisionExceededError("derivative of a precision-0 series is not known at any order")
    return TruncatedPowerSeries._raw(tuple(n * c for n, c in enumerate(f.coeffs) if n))


def integrate(f: TruncatedPowerSeries) -> TruncatedPowerSeries:
    """Antiderivative with zero constant term; precision rises by one."""
    return TruncatedPowerSeries._raw(
        (Fraction(0),) + tuple(c / (n + 1) for n, c in enumerate(f.coeffs))
    )


def is_regular(f: TruncatedPowerSeries) -> bool:
    """True iff ``[x^0]f == 0`` and ``[x^1]f != 0``."""
    return coefficient(f, 0) == 0 and coefficient(f, 1) != 0
