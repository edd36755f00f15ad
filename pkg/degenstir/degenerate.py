"""λ-falling factorials, λ-binomials and the degenerate exponential.

The degenerate exponential ``(1+λt)^{a/λ}`` has EGF coefficients
``(a)_{n,λ} = a(a−λ)⋯(a−(n−1)λ)``. Nothing here ever divides by λ: every
formula is kept in its cancelled polynomial form so that λ = 0 is a legal
substitution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .algebra import EgfSeries, MultiPoly, Scalar, egf_exp, poly_sum
from .common import ParameterError, check_index

PolyLike = Union[MultiPoly, Scalar]


@dataclass(frozen=True)
class DegFalling:
    """``(base)_{length,λ}`` together with its expanded value."""
    base: MultiPoly
    length: int
    value: MultiPoly

    @classmethod
    def of(cls, base: PolyLike, length: int) -> DegFalling:
        base = MultiPoly.coerce(base)
        return cls(base, length, deg_falling(base, length))


@lru_cache(maxsize=4096)
def _deg_falling(a: MultiPoly, n: int) -> MultiPoly:
    if n == 0:
        return MultiPoly.one()
    return _deg_falling(a, n - 1) * (a - MultiPoly.lam().scale(n - 1))


def deg_falling(a: PolyLike, n: int) -> MultiPoly:
    """``(a)_{n,λ}``; the empty product (n = 0) is 1."""
    check_index("n", n)
    return _deg_falling(MultiPoly.coerce(a), n)


def deg_binom(a: PolyLike, n: int) -> MultiPoly:
    """``C(a,n)_λ = (a)_{n,λ}/n!``."""
    return deg_falling(a, n) / math.factorial(n)


def deg_factorial(n: int) -> MultiPoly:
    """The λ-analogue of n!: ``(n)_λ! = (n)_{n,λ}``."""
    return deg_falling(n, n)


def deg_binom_int(n: int, k: int) -> MultiPoly:
    """``C(n,k)_λ = (n)_{k,λ}/k!`` for integers n ≥ k ≥ 0."""
    check_index("k", k)
    if k > n:
        raise ParameterError(f"λ-binomial needs n >= k, got n={n}, k={k}")
    return deg_binom(n, k)


def build_deg_power(a: PolyLike, order: int) -> EgfSeries:
    """The truncated series of ``(1+λt)^{a/λ}``: cₗ = (a)_{l,λ}."""
    a = MultiPoly.coerce(a)
    return EgfSeries.generate(order, lambda l: deg_falling(a, l))


def scaled_log_series(a: PolyLike, order: int) -> EgfSeries:
    """``(a/λ)·log(1+λt)`` with the 1/λ cancelled.

    Coefficients are cₙ = (−1)^{n−1}·a·λ^{n−1}·(n−1)! for n ≥ 1, c₀ = 0.
    """
    a = MultiPoly.coerce(a)
    lam = MultiPoly.lam()

    def coeff(n: int) -> MultiPoly:
        if n == 0:
            return MultiPoly.zero()
        return (a * lam ** (n - 1)).scale((-1) ** (n - 1) * math.factorial(n - 1))

    return EgfSeries.generate(order, coeff)


def build_deg_power_log(a: PolyLike, order: int) -> EgfSeries:
    """``exp((a/λ)·log(1+λt))``; must agree with :func:`build_deg_power`."""
    return egf_exp(scaled_log_series(a, order))


def chu_vandermonde_lambda(xv: PolyLike, yv: PolyLike, n: int) -> tuple[MultiPoly, MultiPoly]:
    """Both sides of ``Σ_m C(y,m)_λ·C(x,n−m)_λ = C(x+y,n)_λ``."""
    check_index("n", n)
    xv, yv = MultiPoly.coerce(xv), MultiPoly.coerce(yv)
    lhs = poly_sum(deg_binom(yv, m) * deg_binom(xv, n - m) for m in range(n + 1))
    return lhs, deg_binom(xv + yv, n)
