"""Degenerate Stirling polynomials of the second kind S₂,λ(n,k|x).

Defined by the generating function
``(1/k!)(1+λt)^{x/λ}((1+λt)^{1/λ} − 1)^k = Σ_{n≥k} S₂,λ(n,k|x) tⁿ/n!``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import oracle
from .algebra import MultiPoly, poly_sum
from .common import check_index
from .degenerate import deg_binom, deg_falling
from .difference import delta_power
from .stirling import stirling1


@dataclass(frozen=True)
class DegStirlingResult:
    n: int
    k: int
    value: MultiPoly


@lru_cache(maxsize=None)
def deg_stirling2(n: int, k: int) -> MultiPoly:
    """``(n!/k!)·Σ_{l=0}^{k} C(k,l)(−1)^{k−l}·C(l+x, n)_λ``; zero when n < k."""
    check_index("n", n)
    check_index("k", k)
    if n < k:
        return MultiPoly.zero()
    x = MultiPoly.x()
    total = poly_sum(deg_binom(x + l, n).scale((-1) ** (k - l) * math.comb(k, l))
                     for l in range(k + 1))
    return total.scale(Fraction(math.factorial(n), math.factorial(k)))


def deg_stirling2_result(n: int, k: int) -> DegStirlingResult:
    return DegStirlingResult(n, k, deg_stirling2(n, k))


def deg_stirling2_via_s1(n: int, k: int) -> MultiPoly:
    """``Σ_{m=0}^{n} (1/k!)·Δᵏxᵐ·λ^{n−m}·S₁(n,m)``."""
    check_index("n", n)
    check_index("k", k)
    if n < k:
        return MultiPoly.zero()
    lam = MultiPoly.lam()
    total = poly_sum(delta_power(k, m) * lam ** (n - m) * stirling1(n, m) for m in range(n + 1))
    return total / math.factorial(k)


def deg_stirling2_gf(n_max: int, k: int) -> list[MultiPoly]:
    """Coefficients c_k..c_{n_max} of the defining generating function."""
    check_index("n_max", n_max)
    coeffs = oracle.coefficients(oracle.SeriesFamily("deg_stirling2_gf", k=k), n_max)
    return coeffs[k:]


def deg_stirling2_table(n_max: int) -> list[list[MultiPoly]]:
    """Rows 0..n_max built by the recurrence

    ``S₂,λ(n+1,k|x) = (x+k−nλ)·S₂,λ(n,k|x) + S₂,λ(n,k−1|x)``

    with the k = 0 column ``(x)_{n,λ}`` and a unit diagonal.
    """
    check_index("n_max", n_max)
    x, lam = MultiPoly.x(), MultiPoly.lam()
    rows: list[list[MultiPoly]] = [[MultiPoly.one()]]
    for n in range(n_max):
        prev = rows[n]
        row = [deg_falling(x, n + 1)]
        row += [(x + k - lam.scale(n)) * prev[k] + prev[k - 1] for k in range(1, n + 1)]
        row.append(MultiPoly.one())
        rows.append(row)
    return rows
