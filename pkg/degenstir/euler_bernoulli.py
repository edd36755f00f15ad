"""Bernoulli and Euler polynomials and their Carlitz degenerate analogues.

Every family here has a generating function of the form ``A(t)·B(t, x)``
with ``B = e^{xt}`` or ``(1+λt)^{x/λ}``; the polynomials are read off a
single series per request, built at order ``n_max + 1``.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .algebra import EgfSeries, MultiPoly, egf_inverse, egf_mul, egf_pow, poly_sum
from .common import ParameterError, Rational, check_index
from .degenerate import build_deg_power, deg_falling
from .degenerate_stirling import deg_stirling2
from .stirling import stirling2

logger = logging.getLogger(__name__)


class SequenceFamily(Enum):
    BERNOULLI = "bernoulli"
    EULER = "euler"
    DEG_BERNOULLI = "deg_bernoulli"
    DEG_EULER_R = "deg_euler_r"


@dataclass(frozen=True)
class PolySequence:
    family: SequenceFamily
    order_r: int
    values: tuple[MultiPoly, ...]

    def __getitem__(self, n: int) -> MultiPoly:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


def _denominator(family: SequenceFamily, order: int) -> EgfSeries:
    """The series whose inverse multiplies the exponential factor."""
    if family is SequenceFamily.BERNOULLI:
        # (e^t − 1)/t
        return EgfSeries.generate(order, lambda n: Fraction(1, n + 1))
    if family is SequenceFamily.EULER:
        # (e^t + 1)/2
        return EgfSeries.generate(order, lambda n: 1 if n == 0 else Fraction(1, 2))
    if family is SequenceFamily.DEG_BERNOULLI:
        # ((1+λt)^{1/λ} − 1)/t
        return EgfSeries.generate(order, lambda n: deg_falling(1, n + 1) / (n + 1))
    # ((1+λt)^{1/λ} + 1)/2
    return EgfSeries.generate(order, lambda n: 1 if n == 0 else deg_falling(1, n) / 2)


@lru_cache(maxsize=64)
def poly_sequence(family: SequenceFamily, n_max: int, order_r: int = 1) -> PolySequence:
    """Values 0..n_max of the requested family."""
    check_index("n_max", n_max)
    if order_r < 1:
        raise ParameterError(f"order r must be at least 1, got {order_r}")
    order = n_max + 1
    x = MultiPoly.x()
    if family in (SequenceFamily.BERNOULLI, SequenceFamily.EULER):
        base = EgfSeries.exp_series(x, order)
    else:
        base = build_deg_power(x, order)
    factor = egf_inverse(_denominator(family, order))
    if family is SequenceFamily.DEG_EULER_R:
        factor = egf_pow(factor, order_r)
    series = egf_mul(factor, base)
    logger.debug("Built %s sequence up to n=%d", family.value, n_max)
    return PolySequence(family, order_r, series.coeffs[:n_max + 1])


def bernoulli_poly(n: int) -> MultiPoly:
    return poly_sequence(SequenceFamily.BERNOULLI, n)[n]


@lru_cache(maxsize=None)
def bernoulli_number(n: int) -> Rational:
    """Bₙ from ``Σ_{k=0}^{n} C(n+1,k)·B_k = 0`` (n ≥ 1), B₀ = 1."""
    check_index("n", n)
    if n == 0:
        return Fraction(1)
    acc = sum((math.comb(n + 1, k) * bernoulli_number(k) for k in range(n)), Fraction(0))
    return -acc / (n + 1)


def euler_poly(n: int) -> MultiPoly:
    return poly_sequence(SequenceFamily.EULER, n)[n]


def euler_number_from_s2(n: int) -> Rational:
    """``Eₙ = Σ_{l=0}^{n} S₂(n,l)·2^{−l}·l!·(−1)^l``."""
    check_index("n", n)
    return sum((stirling2(n, l) * Fraction((-1) ** l * math.factorial(l), 2 ** l) for l in range(n + 1)),
               Fraction(0))


def deg_bernoulli(n: int) -> MultiPoly:
    return poly_sequence(SequenceFamily.DEG_BERNOULLI, n)[n]


def deg_euler_higher(n: int, r: int) -> MultiPoly:
    """The order-r Carlitz degenerate Euler polynomial; r = 1 is the plain one."""
    return poly_sequence(SequenceFamily.DEG_EULER_R, n, r)[n]


def deg_euler(n: int) -> MultiPoly:
    return deg_euler_higher(n, 1)


def deg_euler_closed(n: int, r: int) -> MultiPoly:
    """``Σ_{l=0}^{n} C(r+l−1,l)·2^{−l}·(−1)^l·l!·S₂,λ(n,l|x)``."""
    check_index("n", n)
    if r < 1:
        raise ParameterError(f"order r must be at least 1, got {r}")
    return poly_sum(deg_stirling2(n, l).scale(Fraction(math.comb(r + l - 1, l) * (-1) ** l * math.factorial(l), 2 ** l))
                    for l in range(n + 1))


def appell_expand(numbers: list[Rational]) -> MultiPoly:
    """``Σ_k C(n,k)·a_k·x^{n−k}`` for n = len(numbers) − 1."""
    n = len(numbers) - 1
    return MultiPoly({(n - k, 0): math.comb(n, k) * a for k, a in enumerate(numbers)})
