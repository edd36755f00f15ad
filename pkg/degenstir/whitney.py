"""r-Whitney numbers W_{m,r}(n,k) and the degenerate Whitney numbers W_{m,r}(n,k|λ).

Normalisation of the degenerate closed form: the generating function
``(1/(mᵏk!))(1+λt)^{r/λ}((1+λt)^{m/λ} − 1)^k`` forces the factor ``1/mᵏ`` in

    W_{m,r}(n,k|λ) = (n!/(mᵏ·k!)) Σ_{l=0}^{k} C(k,l)(−1)^{k−l} C(ml+r, n)_λ.

Without the ``1/mᵏ`` the right-hand side disagrees with its own
generating function whenever m > 1 and k ≥ 1 (for (n,k,m,r) = (2,1,2,1) it
gives 8 − 2λ instead of 4 − λ), and its λ → 0 limit is no longer W_{m,r}(n,k).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import oracle
from .algebra import MultiPoly, poly_sum
from .common import ParameterError, Rational, check_index
from .degenerate import deg_binom, deg_falling
from .difference import delta_rational
from .stirling import falling_factorial, stirling1, stirling2


@dataclass(frozen=True)
class WhitneyParams:
    m: int = 1
    r: int = 0

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ParameterError(f"m must be at least 1, got {self.m}")
        if self.r < 0:
            raise ParameterError(f"r must be nonnegative, got {self.r}")


@lru_cache(maxsize=None)
def whitney(n: int, k: int, params: WhitneyParams) -> Rational:
    """``W_{m,r}(n,k) = Σ_{i=k}^{n} C(n,i)·r^{n−i}·S₂(i,k)·m^{i−k}``."""
    check_index("n", n)
    check_index("k", k)
    m, r = params.m, params.r
    return sum((math.comb(n, i) * r ** (n - i) * stirling2(i, k) * m ** (i - k) for i in range(k, n + 1)),
               Fraction(0))


def whitney_via_difference(n: int, k: int, params: WhitneyParams) -> Rational:
    """``m^{n−k}·(1/k!)·Δᵏ(r/m)ⁿ``; zero when n < k."""
    check_index("n", n)
    check_index("k", k)
    if n < k:
        return Fraction(0)
    m = params.m
    return Fraction(m) ** (n - k) * delta_rational(k, n, Fraction(params.r, m)) / math.factorial(k)


def whitney_basis_identity(n: int, params: WhitneyParams) -> tuple[MultiPoly, MultiPoly]:
    """Both sides of ``(mx+r)ⁿ = Σ_k mᵏ·W_{m,r}(n,k)·(x)ₖ``."""
    check_index("n", n)
    lhs = (MultiPoly.x().scale(params.m) + params.r) ** n
    rhs = poly_sum(falling_factorial(k).scale(params.m ** k * whitney(n, k, params)) for k in range(n + 1))
    return lhs, rhs


def whitney_table(n_max: int, params: WhitneyParams) -> list[list[Rational]]:
    """Rows built by ``W(n+1,k) = (r+mk)·W(n,k) + W(n,k−1)``; W(n,0) = rⁿ."""
    check_index("n_max", n_max)
    m, r = params.m, params.r
    rows: list[list[Rational]] = [[Fraction(1)]]
    for n in range(n_max):
        prev = rows[n]
        row = [Fraction(r) ** (n + 1)]
        row += [(r + m * k) * prev[k] + prev[k - 1] for k in range(1, n + 1)]
        row.append(Fraction(1))
        rows.append(row)
    return rows


@lru_cache(maxsize=None)
def deg_whitney(n: int, k: int, params: WhitneyParams) -> MultiPoly:
    """``(n!/(mᵏ·k!))·Σ_{l=0}^{k} C(k,l)(−1)^{k−l}·C(ml+r, n)_λ``; zero when n < k."""
    check_index("n", n)
    check_index("k", k)
    if n < k:
        return MultiPoly.zero()
    m, r = params.m, params.r
    total = poly_sum(deg_binom(m * l + r, n).scale((-1) ** (k - l) * math.comb(k, l)) for l in range(k + 1))
    return total.scale(Fraction(math.factorial(n), m ** k * math.factorial(k)))


def deg_whitney_unnormalised(n: int, k: int, params: WhitneyParams) -> MultiPoly:
    """The closed form without the ``1/mᵏ`` factor; kept for comparison only."""
    return deg_whitney(n, k, params).scale(params.m ** k)


def deg_whitney_via_s1(n: int, k: int, params: WhitneyParams) -> MultiPoly:
    """``(1/(k!·mᵏ))·Σ_{j=0}^{n} λ^{n−j}·S₁(n,j)·mʲ·Δᵏ(r/m)ʲ``."""
    check_index("n", n)
    check_index("k", k)
    if n < k:
        return MultiPoly.zero()
    m = params.m
    base = Fraction(params.r, m)
    lam = MultiPoly.lam()
    total = poly_sum((lam ** (n - j)).scale(stirling1(n, j) * m ** j * delta_rational(k, j, base))
                     for j in range(n + 1))
    return total.scale(Fraction(1, math.factorial(k) * m ** k))


def deg_whitney_gf(n_max: int, k: int, params: WhitneyParams) -> list[MultiPoly]:
    """Coefficients c_k..c_{n_max} of the degenerate Whitney generating function."""
    check_index("n_max", n_max)
    family = oracle.SeriesFamily("deg_whitney_gf", k=k, m=params.m, r=params.r)
    return oracle.coefficients(family, n_max)[k:]


def deg_whitney_table(n_max: int, params: WhitneyParams) -> list[list[MultiPoly]]:
    """Rows built by ``W(n+1,k|λ) = (r+mk−nλ)·W(n,k|λ) + W(n,k−1|λ)``.

    The k = 0 column is ``(r)_{n,λ}`` and the diagonal is 1.
    """
    check_index("n_max", n_max)
    m, r = params.m, params.r
    lam = MultiPoly.lam()
    rows: list[list[MultiPoly]] = [[MultiPoly.one()]]
    for n in range(n_max):
        prev = rows[n]
        row = [deg_falling(r, n + 1)]
        row += [(MultiPoly.const(r + m * k) - lam.scale(n)) * prev[k] + prev[k - 1] for k in range(1, n + 1)]
        row.append(MultiPoly.one())
        rows.append(row)
    return rows
