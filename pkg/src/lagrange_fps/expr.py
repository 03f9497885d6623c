"""
A small expression language in one variable ``x`` evaluated to power series.

Grammar::

    expr    := term { ("+" | "-") term }
    term    := unary { ("*" | "/") unary }
    unary   := "-" unary | postfix
    postfix := atom { "^" integer }
    atom    := number | "x" | ident "(" expr ")" | "(" expr ")"
    number  := integer [ "/" integer ]

``ident`` is one of sin, cos, tan, asin (arcsin), atan (arctan), exp, log1p,
or ``inverse`` for the compositional inverse.

>>> str(parse("x - x^3/6"))
'x - x^3/6'
>>> limit_ratio("sin(tan(x)) - tan(sin(x))", "asin(atan(x)) - atan(asin(x))")
Finite(value=Fraction(1, 1))
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Union

from .elementary import GENERATORS
from .errors import (
    DivisionOrderError,
    MalformedInputError,
    NotComposableError,
    NotRegularError,
    SeriesError,
    ZeroAtPrecisionError,
)
from .inversion import lagrange_inverse
from .series_core import (
    TruncatedPowerSeries,
    add,
    compose,
    constant,
    identity,
    is_regular,
    mul,
    neg,
    power,
    reciprocal,
    sub,
    truncate,
)
from .theorem import ord_lead

__all__ = [
    "Expr", "Const", "Var", "Neg", "Add", "Sub", "Mul", "Div", "Pow", "Apply", "Inverse",
    "ParseError", "UnknownIdentifierError",
    "parse", "to_text", "evaluate",
    "LimitResult", "Finite", "SignedInfinity", "TwoSidedDivergence", "UndeterminedAtPrecision",
    "limit_ratio",
    "FUNCTIONS", "MAX_PRECISION", "DEFAULT_PRECISION",
]

DEFAULT_PRECISION = 16
MAX_PRECISION = 64

FUNCTIONS = frozenset(GENERATORS)
ALIASES = {"arcsin": "asin", "arctan": "atan"}
IDENTIFIERS = FUNCTIONS | frozenset(ALIASES) | {"inverse"}


# -- AST -------------------------------------------------------------------

class Expr:
    """Base class of expression nodes."""

    def __str__(self):
        return to_text(self)


@dataclass(frozen=True)
class Const(Expr):
    value: Fraction


@dataclass(frozen=True)
class Var(Expr):
    pass


@dataclass(frozen=True)
class Neg(Expr):
    operand: Expr


@dataclass(frozen=True)
class Add(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Sub(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Mul(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Div(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Pow(Expr):
    base: Expr
    exponent: int

    def __post_init__(self):
        if self.exponent < 0:
            raise MalformedInputError("exponent must be nonnegative")


@dataclass(frozen=True)
class Apply(Expr):
    func: str
    arg: Expr

    def __post_init__(self):
        if self.func not in FUNCTIONS:
            raise MalformedInputError(f"unknown function {self.func!r}")


@dataclass(frozen=True)
class Inverse(Expr):
    operand: Expr


# -- lexer / parser ----------------------------------------------------------

class ParseError(SeriesError, ValueError):
    """Syntax error at a byte offset into the UTF-8 input."""

    def __init__(self, message: str, offset: int, expected: FrozenSet[str] = frozenset()):
        self.offset = offset
        self.expected = frozenset(expected)
        detail = message
        if self.expected:
            detail += " (expected " + ", ".join(sorted(self.expected)) + ")"
        super().__init__(f"{detail} at offset {offset}")


class UnknownIdentifierError(ParseError):
    def __init__(self, name: str, offset: int):
        self.name = name
        super().__init__(f"unknown identifier {name!r}", offset, IDENTIFIERS | {"x"})


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([-+*/^()]))")


@dataclass
class _Token:
    kind: str  # "integer", "ident", an operator character, "invalid" or "end"
    text: str
    offset: int


def _tokenize(source: str):
    # Offsets count UTF-8 bytes: each non-ASCII byte becomes one placeholder char.
    text = "".join(chr(b) if b < 128 else "\ufffd" for b in source.encode("utf-8"))
    pos = 0
    tokens = []
    while True:
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            stripped = len(text) - len(text[pos:].lstrip())
            if stripped == len(text):
                tokens.append(_Token("end", "", len(text)))
                return tokens
            # Left for the parser, which knows what it expected here.
            tokens.append(_Token("invalid", text[stripped], stripped))
            tokens.append(_Token("end", "", len(text)))
            return tokens
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(_Token("integer", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(_Token("ident", m.group(2), start))
        else:
            tokens.append(_Token(m.group(3), m.group(3), start))
        pos = m.end()


class _Parser:
    def __init__(self, source: str):
        self.tokens = _tokenize(source)
        self.i = 0

    @property
    def tok(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def fail(self, expected):
        t = self.tok
        found = "end of input" if t.kind == "end" else repr(t.text)
        raise ParseError(f"unexpected {found}", t.offset, expected)

    def expect(self, kind):
        if self.tok.kind != kind:
            self.fail({kind})
        return self.advance()

    def parse(self) -> Expr:
        e = self.expr()
        if self.tok.kind != "end":
            self.fail({"+", "-", "*", "/", "^", "end of input"})
        return e

    def expr(self) -> Expr:
        e = self.term()
        while self.tok.kind in ("+", "-"):
            op = self.advance().kind
            rhs = self.term()
            e = Add(e, rhs) if op == "+" else Sub(e, rhs)
        return e

    def term(self) -> Expr:
        e = self.unary()
        while self.tok.kind in ("*", "/"):
            op = self.advance().kind
            rhs = self.unary()
            e = Mul(e, rhs) if op == "*" else Div(e, rhs)
        return e

    def unary(self) -> Expr:
        if self.tok.kind == "-":
            self.advance()
            return Neg(self.unary())
        return self.postfix()

    def postfix(self) -> Expr:
        e = self.atom()
        while self.tok.kind == "^":
            self.advance()
            e = Pow(e, int(self.expect("integer").text))
        return e

    def atom(self) -> Expr:
        t = self.tok
        if t.kind == "integer":
            self.advance()
            value = Fraction(int(t.text))
            # "p/q" is a single literal only when an integer follows the slash.
            if self.tok.kind == "/" and self.tokens[self.i + 1].kind == "integer":
                self.advance()
                q = self.advance()
                if int(q.text) == 0:
                    raise ParseError("zero denominator in literal", q.offset)
                value /= int(q.text)
            return Const(value)
        if t.kind == "(":
            self.advance()
            e = self.expr()
            self.expect(")")
            return e
        if t.kind == "ident":
            if t.text == "x":
                self.advance()
                return Var()
            name = ALIASES.get(t.text, t.text)
            if name not in FUNCTIONS and name != "inverse":
                raise UnknownIdentifierError(t.text, t.offset)
            self.advance()
            self.expect("(")
            arg = self.expr()
            self.expect(")")
            return Inverse(arg) if name == "inverse" else Apply(name, arg)
        self.fail({"number", "x", "function name", "("})


def parse(source: str) -> Expr:
    """Parse ``source`` into an :class:`Expr`; raises :class:`ParseError`."""
    return _Parser(source).parse()


# -- printer -------------------------------------------------------------------

# Binding strength of each printed form; larger binds tighter.
_EXPR, _TERM, _UNARY, _POSTFIX, _ATOM = range(5)


def _level(e: Expr) -> int:
    if isinstance(e, (Add, Sub)):
        return _EXPR
    if isinstance(e, (Mul, Div)):
        return _TERM
    if isinstance(e, Neg):
        return _UNARY
    if isinstance(e, Const):
        if e.value < 0:
            return _UNARY
        # p/q prints as a single literal but reads badly as a power base.
        return _ATOM if e.value.denominator == 1 else _POSTFIX
    if isinstance(e, Pow):
        return _POSTFIX
    return _ATOM


def _wrap(e: Expr, min_level: int) -> str:
    text = to_text(e)
    return f"({text})" if _level(e) < min_level else text


def to_text(e: Expr) -> str:
    """Canonical text with the fewest parentheses that parse back to ``e``."""
    if isinstance(e, Const):
        v = e.value
        if v < 0:
            return "-" + to_text(Const(-v))
        return str(v)
    if isinstance(e, Var):
        return "x"
    if isinstance(e, Neg):
        return "-" + _wrap(e.operand, _UNARY)
    if isinstance(e, (Add, Sub)):
        op = " + " if isinstance(e, Add) else " - "
        return _wrap(e.left, _EXPR) + op + _wrap(e.right, _TERM)
    if isinstance(e, (Mul, Div)):
        left = _wrap(e.left, _TERM)
        right = _wrap(e.right, _UNARY)
        if isinstance(e, Div) and _bare_integer(e.right, right) and _text_ends_with_literal(e.left, left):
            right = f"({right})"
        return left + ("*" if isinstance(e, Mul) else "/") + right
    if isinstance(e, Pow):
        return _wrap(e.base, _ATOM) + f"^{e.exponent}"
    if isinstance(e, Apply):
        return f"{e.func}({to_text(e.arg)})"
    if isinstance(e, Inverse):
        return f"inverse({to_text(e.operand)})"
    raise TypeError(f"not an expression node: {e!r}")


_TRAILING_INT = re.compile(r"(\^?)\d+$")


def _bare_integer(e: Expr, text: str) -> bool:
    return text[0].isdigit()


def _text_ends_with_literal(e: Expr, text: str) -> bool:
    # A trailing number literal would absorb a following "/integer";
    # exponent digits ("x^2") would not.
    m = _TRAILING_INT.search(text)
    return m is not None and not m.group(1)


# -- evaluation ------------------------------------------------------------------

def evaluate(e: Union[Expr, str], precision: int) -> TruncatedPowerSeries:
    """Power series of ``e`` at 0, known through ``x**precision`` or less.

    Division may lower the precision: ``a / b`` with ``ord(b) = s`` is
    ``(a / x^s) * (b / x^s)^(-1)`` and is known only through ``precision - s``.
    """
    if isinstance(e, str):
        e = parse(e)
    if not isinstance(precision, int) or precision < 1:
        raise MalformedInputError("precision must be a positive integer")
    if precision > MAX_PRECISION:
        raise MalformedInputError(f"precision {precision} exceeds the cap of {MAX_PRECISION}")
    return _eval(e, precision)


def _eval(e: Expr, n: int) -> TruncatedPowerSeries:
    if isinstance(e, Const):
        return constant(e.value, n)
    if isinstance(e, Var):
        return identity(n)
    if isinstance(e, Neg):
        return neg(_eval(e.operand, n))
    if isinstance(e, Add):
        return add(_eval(e.left, n), _eval(e.right, n))
    if isinstance(e, Sub):
        return sub(_eval(e.left, n), _eval(e.right, n))
    if isinstance(e, Mul):
        return mul(_eval(e.left, n), _eval(e.right, n))
    if isinstance(e, Div):
        return _divide(_eval(e.left, n), _eval(e.right, n))
    if isinstance(e, Pow):
        return power(_eval(e.base, n), e.exponent)
    if isinstance(e, Apply):
        inner = _eval(e.arg, n)
        if inner.coeffs[0]:
            raise NotComposableError(
                f"{e.func}() needs an argument vanishing at 0, got constant term {inner.coeffs[0]}"
            )
        return compose(GENERATORS[e.func](inner.precision), inner)
    if isinstance(e, Inverse):
        inner = _eval(e.operand, n)
        if inner.precision < 1 or not is_regular(inner):
            raise NotRegularError("inverse() needs a series with zero constant term and nonzero x term")
        return lagrange_inverse(inner)
    raise TypeError(f"not an expression node: {e!r}")


def _divide(a: TruncatedPowerSeries, b: TruncatedPowerSeries) -> TruncatedPowerSeries:
    p = min(a.precision, b.precision)
    a, b = truncate(a, p), truncate(b, p)
    try:
        s = ord_lead(b).order
    except ZeroAtPrecisionError:
        raise ZeroAtPrecisionError(
            f"denominator vanishes through x^{p}", precision=p
        ) from None
    if any(a.coeffs[:s]):
        raise DivisionOrderError(
            f"numerator order is below denominator order {s}; quotient is not a power series"
        )
    return mul(TruncatedPowerSeries(a.coeffs[s:]), reciprocal(TruncatedPowerSeries(b.coeffs[s:])))


# -- limits ----------------------------------------------------------------------

class LimitResult:
    """Outcome of ``lim_{x->0} num/den``."""


@dataclass(frozen=True)
class Finite(LimitResult):
    value: Fraction


@dataclass(frozen=True)
class SignedInfinity(LimitResult):
    sign: int
    gap: int


@dataclass(frozen=True)
class TwoSidedDivergence(LimitResult):
    """Odd order gap: the ratio tends to opposite infinities from either side."""
    gap: int


@dataclass(frozen=True)
class UndeterminedAtPrecision(LimitResult):
    reached_order: int


def _resolve(num: Expr, den: Expr, n: int):
    try:
        return ord_lead(_eval(num, n)), ord_lead(_eval(den, n))
    except ZeroAtPrecisionError:
        return None


def limit_ratio(
    num: Union[Expr, str],
    den: Union[Expr, str],
    start_order: int = DEFAULT_PRECISION,
    max_order: int = MAX_PRECISION,
) -> LimitResult:
    """Limit at 0 of ``num/den`` from leading terms of their series.

    Precision starts at ``start_order`` and doubles, capped at ``max_order``,
    until both series show a nonzero coefficient.
    """
    num = parse(num) if isinstance(num, str) else num
    den = parse(den) if isinstance(den, str) else den
    if not 1 <= start_order <= max_order:
        raise MalformedInputError("need 1 <= start_order <= max_order")
    if max_order > MAX_PRECISION:
        raise MalformedInputError(f"max_order {max_order} exceeds the cap of {MAX_PRECISION}")

    n = start_order
    while True:
        leads = _resolve(num, den, n)
        if leads is not None:
            break
        if n == max_order:
            return UndeterminedAtPrecision(max_order)
        n = min(2 * n, max_order)

    top, bottom = leads
    if top.order > bottom.order:
        return Finite(Fraction(0))
    ratio = top.leading / bottom.leading
    if top.order == bottom.order:
        return Finite(ratio)
    gap = bottom.order - top.order
    if gap % 2:
        return TwoSidedDivergence(gap)
    return SignedInfinity(1 if ratio > 0 else -1, gap)
