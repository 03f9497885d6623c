"""
Order and leading coefficient of a series, and the reversion-difference check.

For two distinct unit-slope regular series ``f`` and ``g`` the difference
``f - g`` and the swapped difference of inverses ``g^{-1} - f^{-1}`` share
their order and leading coefficient.  :func:`check_theorem2` verifies this on
a concrete pair; :func:`run_trials` does it for many seeded random pairs.

Random series come from :class:`random.Random` (Mersenne Twister), seeded
explicitly, so every trial is reproducible from the integer seed alone.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

from .errors import MalformedInputError, PreconditionError, ZeroAtPrecisionError
from .inversion import lagrange_inverse
from .series_core import TruncatedPowerSeries, coefficient, is_regular, sub

__all__ = [
    "OrdLead",
    "Theorem2Report",
    "TrialSummary",
    "ord_lead",
    "check_theorem2",
    "random_regular",
    "random_pair",
    "run_trials",
]


@dataclass(frozen=True)
class OrdLead:
    order: int
    leading: Fraction

    def __post_init__(self):
        if self.leading == 0:
            raise ValueError("leading coefficient must be nonzero")


@dataclass(frozen=True)
class Theorem2Report:
    k_direct: int
    m_direct: Fraction
    k_inverse: int
    m_inverse: Fraction

    @property
    def holds(self) -> bool:
        return self.k_direct == self.k_inverse and self.m_direct == self.m_inverse


def ord_lead(f: TruncatedPowerSeries) -> OrdLead:
    """First nonzero coefficient of ``f`` and its index."""
    for n, c in enumerate(f.coeffs):
        if c:
            return OrdLead(n, c)
    raise ZeroAtPrecisionError(
        f"series vanishes through x^{f.precision}; order is not determined",
        precision=f.precision,
    )


def check_theorem2(f: TruncatedPowerSeries, g: TruncatedPowerSeries) -> Theorem2Report:
    """Compare ``ord``/leading coefficient of ``f - g`` and ``g^{-1} - f^{-1}``.

    Raises :class:`PreconditionError` unless both series are regular with
    linear coefficient 1, and :class:`ZeroAtPrecisionError` when ``f`` and
    ``g`` agree through their precision.
    """
    if f.precision != g.precision:
        raise MalformedInputError(f"precision mismatch: {f.precision} vs {g.precision}")
    for name, s in (("f", f), ("g", g)):
        if s.precision < 1 or not is_regular(s):
            raise PreconditionError(f"{name} is not regular")
        if coefficient(s, 1) != 1:
            raise PreconditionError(f"[x^1]{name} = {coefficient(s, 1)}, expected 1")

    direct = ord_lead(sub(f, g))
    inverse = ord_lead(sub(lagrange_inverse(g), lagrange_inverse(f)))
    return Theorem2Report(direct.order, direct.leading, inverse.order, inverse.leading)


def _random_coeff(rng: random.Random, bound: int) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_regular(seed: int, n: int, coeff_bound: int) -> TruncatedPowerSeries:
    """Seeded random series ``x + a2 x^2 + ... + aN x^N``.

    Each ``a_i`` is ``p/q`` with ``p`` uniform in ``[-B, B]`` and ``q`` uniform
    in ``[1, B]``.
    """
    if n < 1 or coeff_bound < 1:
        raise MalformedInputError("need n >= 1 and coeff_bound >= 1")
    rng = random.Random(seed)
    coeffs = [Fraction(0), Fraction(1)]
    coeffs += [_random_coeff(rng, coeff_bound) for _ in range(n - 1)]
    return TruncatedPowerSeries(coeffs)


def random_pair(seed: int, n: int, coeff_bound: int):
    """Two distinct unit-slope series agreeing below a random degree ``k >= 2``.

    Pairs drawn independently almost always differ at ``x**2``; sharing a
    prefix makes every order ``2..n`` reachable.
    """
    if n < 2:
        raise MalformedInputError("distinct unit-slope series need precision >= 2")
    rng = random.Random(seed)
    f = random_regular(rng.getrandbits(64), n, coeff_bound)
    k = rng.randint(2, n)
    coeffs = list(f.coeffs[:k])
    while True:
        c = _random_coeff(rng, coeff_bound)
        if c != f.coeffs[k]:
            break
    coeffs.append(c)
    coeffs += [_random_coeff(rng, coeff_bound) for _ in range(n - k)]
    return f, TruncatedPowerSeries(coeffs)


@dataclass
class TrialSummary:
    trials: int = 0
    held: int = 0
    failures: List[tuple] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.held == self.trials


def run_trials(
    trials: int,
    seed: int,
    coeff_bound: int = 9,
    order: Optional[int] = None,
    min_order: int = 4,
    max_order: int = 16,
) -> TrialSummary:
    """Check many random pairs; a fixed ``order`` overrides the precision range."""
    rng = random.Random(seed)
    summary = TrialSummary()
    for _ in range(trials):
        n = order if order is not None else rng.randint(min_order, max_order)
        f, g = random_pair(rng.getrandbits(64), n, coeff_bound)
        report = check_theorem2(f, g)
        summary.trials += 1
        if report.holds:
            summary.held += 1
        else:
            summary.failures.append((f, g, report))
    return summary
