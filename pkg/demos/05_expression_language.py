"""
The expression language
=======================

Expressions in x are parsed, printed back in canonical form, and
evaluated to truncated series.  Ratios go through ``limit_ratio``.
"""

from lagrange_fps import evaluate, limit_ratio, parse
from lagrange_fps.expr import ParseError, to_text

e = parse("x - x^3/6")
print(repr(e))
print(to_text(e))

for text in ["sin(x)/x", "(1 - cos(x))/x^2", "inverse(x - x^2)", "exp(log1p(x))"]:
    print(f"{text:20s}", evaluate(text, 8))

try:
    parse("sin[x]")
except ParseError as exc:
    print("parse error:", exc)

for num, den in [("x", "x"), ("x^2", "x"), ("x", "x^3"), ("-x", "x^3"), ("x", "x^2"),
                 ("tan(x) - sin(x)", "x^3"), ("sin(x) - sin(x)", "x")]:
    print(f"lim {num} / {den}:", limit_ratio(num, den, start_order=4, max_order=16))
