"""
Arnold's limit
==============

    lim_{x->0} (sin(tan x) - tan(sin x)) / (arcsin(arctan x) - arctan(arcsin x))

The numerator is f - g with f = sin(tan x), g = tan(sin x).  The
denominator is g^{-1} - f^{-1}.  Both begin with -x^7/30, so the limit is 1.
"""

from lagrange_fps import evaluate, limit_ratio, ord_lead

num = "sin(tan(x)) - tan(sin(x))"
den = "asin(atan(x)) - atan(asin(x))"

for text in (num, den):
    s = evaluate(text, 9)
    lead = ord_lead(s)
    print(f"{text:32s} {s}")
    print(f"{'':32s} leading term {lead.leading} x^{lead.order}")

print("limit:", limit_ratio(num, den))

# Starting at a low precision, the order is found by doubling.
print("from order 2:", limit_ratio(num, den, start_order=2))

# The same quantities from the command line:
#   lagrange-fps arnold
#   lagrange-fps limit "sin(tan(x)) - tan(sin(x))" "asin(atan(x)) - atan(asin(x))"
