"""Registry of every generating function the library verifies against.

Each family maps to one construction recipe built only from
:mod:`degenstir.algebra` and :mod:`degenstir.degenerate`. The recipes
recompute from scratch, so agreement with the closed forms elsewhere in the
package is independent evidence.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional
from typing_extensions import TypedDict

from .algebra import EgfSeries, MultiPoly, Scalar, egf_inverse, egf_mul, egf_pow
from .common import ParameterError, check_index, setting
from .degenerate import build_deg_power, deg_falling

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SeriesFamily:
    """A generating function tag plus its parameters.

    Unused parameters are ignored by the recipe but still validated.
    """
    tag: str
    k: int = 0
    m: int = 1
    r: int = 0
    order_r: int = 1

    def __post_init__(self) -> None:
        if self.tag not in FAMILIES:
            raise ParameterError(f"Unknown series family {self.tag!r}")
        if self.k < 0:
            raise ParameterError(f"k must be nonnegative, got {self.k}")
        if self.m < 1:
            raise ParameterError(f"m must be at least 1, got {self.m}")
        if self.r < 0:
            raise ParameterError(f"r must be nonnegative, got {self.r}")
        if self.order_r < 1:
            raise ParameterError(f"order r must be at least 1, got {self.order_r}")


class FamilyData(TypedDict):
    text: str
    recipe: Callable[[SeriesFamily, int], EgfSeries]
    params: tuple[str, ...]


def _minus_one(s: EgfSeries) -> EgfSeries:
    return s - EgfSeries.identity(s.order)


def _log_series(order: int) -> EgfSeries:
    # log(1+t): cₙ = (−1)^{n−1}(n−1)!
    return EgfSeries.generate(order, lambda n: 0 if n == 0 else (-1) ** (n - 1) * math.factorial(n - 1))


def _stirling1_gf(f: SeriesFamily, order: int) -> EgfSeries:
    return egf_pow(_log_series(order), f.k).scale(Fraction(1, math.factorial(f.k)))


def _stirling2_gf(f: SeriesFamily, order: int) -> EgfSeries:
    return egf_pow(_minus_one(EgfSeries.exp_series(1, order)), f.k).scale(Fraction(1, math.factorial(f.k)))


def _stirling2_poly_gf(f: SeriesFamily, order: int) -> EgfSeries:
    return egf_mul(EgfSeries.exp_series(MultiPoly.x(), order), _stirling2_gf(f, order))


def _deg_stirling2_gf(f: SeriesFamily, order: int) -> EgfSeries:
    power = egf_pow(_minus_one(build_deg_power(1, order)), f.k)
    return egf_mul(build_deg_power(MultiPoly.x(), order), power).scale(Fraction(1, math.factorial(f.k)))


def _bernoulli_gf(f: SeriesFamily, order: int) -> EgfSeries:
    # (e^t − 1)/t has cₙ = 1/(n+1)
    denominator = EgfSeries.generate(order, lambda n: Fraction(1, n + 1))
    return egf_mul(egf_inverse(denominator), EgfSeries.exp_series(MultiPoly.x(), order))


def _euler_gf(f: SeriesFamily, order: int) -> EgfSeries:
    denominator = EgfSeries.generate(order, lambda n: 1 if n == 0 else Fraction(1, 2))
    return egf_mul(egf_inverse(denominator), EgfSeries.exp_series(MultiPoly.x(), order))


def _deg_bernoulli_gf(f: SeriesFamily, order: int) -> EgfSeries:
    # ((1+λt)^{1/λ} − 1)/t has cₙ = (1)_{n+1,λ}/(n+1)
    denominator = EgfSeries.generate(order, lambda n: deg_falling(1, n + 1) / (n + 1))
    return egf_mul(egf_inverse(denominator), build_deg_power(MultiPoly.x(), order))


def _deg_euler_r_gf(f: SeriesFamily, order: int) -> EgfSeries:
    half_sum = EgfSeries.generate(order, lambda n: 1 if n == 0 else deg_falling(1, n) / 2)
    return egf_mul(egf_pow(egf_inverse(half_sum), f.order_r), build_deg_power(MultiPoly.x(), order))


def _whitney_gf(f: SeriesFamily, order: int) -> EgfSeries:
    power = egf_pow(_minus_one(EgfSeries.exp_series(f.m, order)), f.k)
    scale = Fraction(1, f.m ** f.k * math.factorial(f.k))
    return egf_mul(EgfSeries.exp_series(f.r, order), power).scale(scale)


def _deg_whitney_gf(f: SeriesFamily, order: int) -> EgfSeries:
    power = egf_pow(_minus_one(build_deg_power(f.m, order)), f.k)
    scale = Fraction(1, f.m ** f.k * math.factorial(f.k))
    return egf_mul(build_deg_power(f.r, order), power).scale(scale)


FAMILIES: dict[str, FamilyData] = {
    "stirling1_gf": {
        "text": "(1/k!) log(1+t)^k",
        "recipe": _stirling1_gf,
        "params": ("k",),
    },
    "stirling2_gf": {
        "text": "(1/k!) (e^t - 1)^k",
        "recipe": _stirling2_gf,
        "params": ("k",),
    },
    "stirling2_poly_gf": {
        "text": "(1/k!) e^(xt) (e^t - 1)^k",
        "recipe": _stirling2_poly_gf,
        "params": ("k",),
    },
    "deg_stirling2_gf": {
        "text": "(1/k!) (1+lt)^(x/l) ((1+lt)^(1/l) - 1)^k",
        "recipe": _deg_stirling2_gf,
        "params": ("k",),
    },
    "bernoulli_gf": {
        "text": "t/(e^t - 1) e^(xt)",
        "recipe": _bernoulli_gf,
        "params": (),
    },
    "euler_gf": {
        "text": "2/(e^t + 1) e^(xt)",
        "recipe": _euler_gf,
        "params": (),
    },
    "deg_bernoulli_gf": {
        "text": "t/((1+lt)^(1/l) - 1) (1+lt)^(x/l)",
        "recipe": _deg_bernoulli_gf,
        "params": (),
    },
    "deg_euler_r_gf": {
        "text": "(2/((1+lt)^(1/l) + 1))^r (1+lt)^(x/l)",
        "recipe": _deg_euler_r_gf,
        "params": ("order_r",),
    },
    "whitney_gf": {
        "text": "1/(m^k k!) e^(rt) (e^(mt) - 1)^k",
        "recipe": _whitney_gf,
        "params": ("k", "m", "r"),
    },
    "deg_whitney_gf": {
        "text": "1/(m^k k!) (1+lt)^(r/l) ((1+lt)^(m/l) - 1)^k",
        "recipe": _deg_whitney_gf,
        "params": ("k", "m", "r"),
    },
}


@lru_cache(maxsize=512)
def build(family: SeriesFamily, order: int) -> EgfSeries:
    """The truncated series of `family` at the given order.

    Series are immutable, so repeated requests share one construction.
    """
    check_index("order", order)
    setting.check_order(order)
    logger.debug("Building %s %s at order %d", family.tag,
                 {p: getattr(family, p) for p in FAMILIES[family.tag]["params"]}, order)
    return FAMILIES[family.tag]["recipe"](family, order)


def coefficients(family: SeriesFamily, order: int, x: Optional[Scalar] = None,
                 lam: Optional[Scalar] = None) -> list[MultiPoly]:
    """c₀..c_N of ``build(family, order)``, optionally specialised."""
    return [c.specialize(x, lam) for c in build(family, order)]
