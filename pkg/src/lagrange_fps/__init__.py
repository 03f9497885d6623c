"""Exact truncated power series, Lagrange inversion, and limits at 0."""

from .errors import (
    DivisionOrderError,
    MalformedInputError,
    NotComposableError,
    NotInvertibleError,
    NotRegularError,
    PrecisionExceededError,
    PreconditionError,
    SeriesError,
    ZeroAtPrecisionError,
)
from .series_core import (
    TruncatedPowerSeries,
    add,
    coefficient,
    compose,
    constant,
    derivative,
    from_coeffs,
    identity,
    integrate,
    is_regular,
    mul,
    neg,
    power,
    reciprocal,
    scale,
    sub,
)
from .elementary import (
    series_arcsin,
    series_arctan,
    series_cos,
    series_exp,
    series_log1p,
    series_sin,
    series_tan,
)
from .inversion import lagrange_inverse, newton_inverse, verify_inverse
from .theorem import OrdLead, Theorem2Report, check_theorem2, ord_lead, random_regular, run_trials
from .expr import evaluate, limit_ratio, parse

__version__ = "0.1.0"
