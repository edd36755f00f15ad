"""The forward difference operator ``Δf(x) = f(x+1) − f(x)`` on polynomials.

Note on normalisation: with ``Δᵏ`` as defined here, ``Δᵏ0ⁿ = k!·S₂(n,k)``.
Some texts write ``Δᵏ0ⁿ = S₂(n,k)`` with the ``1/k!`` absorbed into the
operator; :func:`delta_at_zero` returns the raw value and callers divide.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import MultiPoly, Scalar, poly_sum
from .common import Rational, check_index
from .stirling import falling_factorial


class WrongVariableError(ValueError):
    """A polynomial in x alone was expected but λ appeared."""


def _shifted_power(shift: int, m: int) -> MultiPoly:
    # (x + shift)^m by the binomial theorem; 0^0 = 1
    return MultiPoly({(i, 0): math.comb(m, i) * shift ** (m - i) for i in range(m + 1)})


def delta_power(k: int, m: int) -> MultiPoly:
    """``Δᵏxᵐ = Σ_{l=0}^{k} C(k,l)(−1)^{k−l}(x+l)ᵐ`` as a polynomial in x."""
    check_index("k", k)
    check_index("m", m)
    return poly_sum(_shifted_power(l, m).scale((-1) ** (k - l) * math.comb(k, l))
                    for l in range(k + 1))


def delta_at_zero(k: int, n: int) -> Rational:
    """The raw value ``Δᵏ0ⁿ``; equals ``k!·S₂(n,k)``."""
    check_index("k", k)
    check_index("n", n)
    return Fraction(sum(math.comb(k, l) * (-1) ** (k - l) * l ** n for l in range(k + 1)))


def delta_rational(k: int, j: int, base: Scalar) -> Rational:
    """``Δᵏ`` applied to ``y ↦ yʲ`` and evaluated at the rational `base`."""
    check_index("k", k)
    check_index("j", j)
    base = Fraction(base)
    return sum((math.comb(k, l) * (-1) ** (k - l) * (l + base) ** j for l in range(k + 1)),
               Fraction(0))


def binomial_poly(k: int) -> MultiPoly:
    """``C(x,k) = (x)ₖ/k!``."""
    return falling_factorial(k) / math.factorial(k)


@dataclass(frozen=True)
class NewtonExpansion:
    """Forward differences ``Δᵏf(0)`` for k = 0..deg f."""
    diffs: tuple[Rational, ...]

    def reconstruct(self) -> MultiPoly:
        return newton_reconstruct(self)

    def __len__(self) -> int:
        return len(self.diffs)


def newton_expand(f: MultiPoly) -> NewtonExpansion:
    if f.has_lambda():
        raise WrongVariableError(f"Newton expansion needs a polynomial in x only, got {f}")
    diffs = []
    for k in range(f.degree_x() + 1):
        d = sum((math.comb(k, l) * (-1) ** (k - l) * f.specialize(x_val=l).constant_value()
                 for l in range(k + 1)), Fraction(0))
        diffs.append(d)
    return NewtonExpansion(tuple(diffs))


def newton_reconstruct(expansion: NewtonExpansion) -> MultiPoly:
    """``Σₖ C(x,k)·Δᵏf(0)``; exact for polynomials."""
    return poly_sum(binomial_poly(k).scale(d) for k, d in enumerate(expansion.diffs) if d)
