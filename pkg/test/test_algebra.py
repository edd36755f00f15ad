import math
import random
from fractions import Fraction
from typing import Optional

import pytest

from degenstir.algebra import (CoefficientRangeError, EgfSeries, MultiPoly, NotAUnitError,
                               NotNilpotentError, OrderMismatchError, egf_coeff, egf_exp,
                               egf_inverse, egf_mul, egf_pow, format_rational, parse_rational)
from degenstir.common import ParameterError

x = MultiPoly.x()
lam = MultiPoly.lam()


def test_parse_rational() -> None:
    assert parse_rational("3") == 3
    assert parse_rational("-1/2") == Fraction(-1, 2)
    assert parse_rational(" 6/4 ") == Fraction(3, 2)
    for bad in ("0.5", "1e3", "x", "1/0", ""):
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_format_rational() -> None:
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    assert format_rational(0) == "0"


def test_zero_coefficients_are_dropped() -> None:
    p = MultiPoly({(1, 0): 0, (0, 0): 2})
    assert p == MultiPoly.const(2)
    assert (x - x).is_zero()
    assert len(x - x) == 0


def test_arithmetic() -> None:
    p = x + lam
    assert p * p == x ** 2 + (x * lam).scale(2) + lam ** 2
    assert p - lam == x
    assert 1 - lam == MultiPoly({(0, 0): 1, (0, 1): -1})
    assert (x.scale(2) + 1) / 2 == x + Fraction(1, 2)
    assert x ** 0 == 1
    with pytest.raises(ParameterError):
        _ = x ** -1


def test_hash_matches_equality() -> None:
    assert hash(x + 1) == hash(1 + x)
    assert len({x + 1, 1 + x, x}) == 2
    # constants hash like the rationals they equal
    assert MultiPoly.const(1) == 1 and hash(MultiPoly.const(1)) == hash(1)
    assert hash(MultiPoly.const(Fraction(-1, 2))) == hash(Fraction(-1, 2))
    assert hash(MultiPoly.zero()) == hash(0)
    assert len({MultiPoly.const(2), 2, Fraction(4, 2)}) == 1
    assert {MultiPoly.const(3): "three"}[3] == "three"


def test_degrees_and_inspection() -> None:
    p = (x ** 2) * lam + 3
    assert p.degree_x() == 2
    assert p.degree_lambda() == 1
    assert p.has_lambda() and p.has_x()
    assert p.coefficient(2, 1) == 1
    assert p.coefficient(1, 1) == 0
    assert MultiPoly.const(5).is_constant()
    assert MultiPoly.const(5).constant_value() == 5


def test_specialize() -> None:
    p = x * lam + x - 2
    assert p.specialize(x_val=0) == -2
    assert p.specialize(lambda_val=0) == x - 2
    assert p.specialize(Fraction(1, 2), 2) == Fraction(-1, 2)


def test_render() -> None:
    assert (x ** 2 - lam * x).render() == "x^2 - l*x"
    assert (1 - lam).render() == "1 - l"
    assert (lam.scale(Fraction(1, 2)) - Fraction(1, 2)).render() == "-1/2 + 1/2*l"
    assert (x.scale(2) + 1).render() == "2*x + 1"
    assert MultiPoly.zero().render() == "0"
    assert (1 - lam).render(unicode=True) == "1 - λ"
    assert str(lam ** 2 * x) == "l^2*x"


def test_series_order_checked() -> None:
    with pytest.raises(ValueError):
        EgfSeries(2, (MultiPoly.one(),))
    with pytest.raises(OrderMismatchError):
        egf_mul(EgfSeries.identity(2), EgfSeries.identity(3))


def test_exp_multiplies() -> None:
    # e^{xt} e^{lt} = e^{(x+l)t}
    a = EgfSeries.exp_series(x, 6)
    b = EgfSeries.exp_series(lam, 6)
    assert egf_mul(a, b) == EgfSeries.exp_series(x + lam, 6)


def test_inverse() -> None:
    a = EgfSeries.exp_series(2, 8)
    inv = egf_inverse(a)
    assert inv == EgfSeries.exp_series(-2, 8)
    assert egf_mul(a, inv) == EgfSeries.identity(8)


def test_inverse_needs_unit() -> None:
    with pytest.raises(NotAUnitError):
        egf_inverse(EgfSeries.from_coefficients([0, 1, 0]))
    with pytest.raises(NotAUnitError):
        egf_inverse(EgfSeries.from_coefficients([x, 1, 0]))


def test_exp_of_series() -> None:
    # exp(t) = e^t
    t = EgfSeries.from_coefficients([0, 1, 0, 0, 0, 0])
    assert egf_exp(t) == EgfSeries.exp_series(1, 5)
    with pytest.raises(NotNilpotentError):
        egf_exp(EgfSeries.identity(3))


def test_power() -> None:
    t = EgfSeries.from_coefficients([0, 1, 0, 0, 0])
    # t^2 as an EGF has c_2 = 2!
    assert egf_pow(t, 2).coeffs == tuple(MultiPoly.const(c) for c in (0, 0, 2, 0, 0))
    assert egf_pow(t, 0) == EgfSeries.identity(4)
    assert egf_pow(t, 5) == EgfSeries.zero(4)


def test_coefficient_range() -> None:
    s = EgfSeries.identity(3)
    assert egf_coeff(s, 0) == 1
    with pytest.raises(CoefficientRangeError):
        egf_coeff(s, 4)


def test_series_ring_operations() -> None:
    a = EgfSeries.exp_series(x, 4)
    assert (a - a) == EgfSeries.zero(4)
    assert (a + a) == a.scale(2)
    assert -a == a.scale(-1)
    assert a.specialize(x_val=0) == EgfSeries.identity(4)


def random_poly(rng: random.Random, deg_x: int = 3, deg_lam: int = 2) -> MultiPoly:
    return MultiPoly({(rng.randint(0, deg_x), rng.randint(0, deg_lam)): Fraction(rng.randint(-5, 5), rng.randint(1, 4))
                      for _ in range(rng.randint(0, 5))})


def random_series(rng: random.Random, order: int, c0: Optional[Fraction] = None, deg_x: int = 2) -> EgfSeries:
    first = random_poly(rng) if c0 is None else MultiPoly.const(c0)
    return EgfSeries.from_coefficients([first] + [random_poly(rng, deg_x, 1) for _ in range(order)])


def stored_zeros(p: MultiPoly) -> list[tuple[int, int]]:
    return [m for m, c in p.ordered_terms() if c == 0]


@pytest.mark.parametrize("seed", range(20))
def test_ring_axioms(seed: int) -> None:
    rng = random.Random(seed)
    a, b, c = random_poly(rng), random_poly(rng), random_poly(rng)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert a * 1 == a and a + 0 == a


@pytest.mark.parametrize("seed", range(10))
def test_convolution_matches_binomial_sum(seed: int) -> None:
    rng = random.Random(100 + seed)
    a, b = random_series(rng, 6), random_series(rng, 6)
    product = egf_mul(a, b)
    for n in range(7):
        expected = MultiPoly.zero()
        for i in range(n + 1):
            expected = expected + a.coeffs[i] * b.coeffs[n - i] * math.comb(n, i)
        assert egf_coeff(product, n) == expected


@pytest.mark.parametrize("order", [0, 1, 5, 16])
def test_inverse_of_random_unit(order: int) -> None:
    rng = random.Random(order)
    for _ in range(3):
        c0 = Fraction(rng.choice([-3, -1, 1, 2, 5]), rng.randint(1, 3))
        a = random_series(rng, order, c0, deg_x=1)
        assert egf_mul(a, egf_inverse(a)) == EgfSeries.identity(order)


@pytest.mark.parametrize("seed", range(6))
def test_exp_turns_sums_into_products(seed: int) -> None:
    rng = random.Random(200 + seed)
    a, b = random_series(rng, 7, Fraction(0)), random_series(rng, 7, Fraction(0))
    assert egf_exp(a + b) == egf_mul(egf_exp(a), egf_exp(b))


def test_no_stored_zero_coefficients() -> None:
    rng = random.Random(7)
    results = [(x + lam) * (x - lam), x - x, (x + 1).scale(0), (x * lam - x).specialize(lambda_val=1),
               (x + lam) ** 3 - x ** 3, MultiPoly({(0, 0): Fraction(0), (1, 1): Fraction(2, 4)})]
    for _ in range(30):
        a, b = random_poly(rng), random_poly(rng)
        results += [a + b, a - b, a * b, a - a, (a * b).specialize(x_val=Fraction(rng.randint(-2, 2))),
                    a.specialize(lambda_val=0), -a, a / 3]
    for p in results:
        assert stored_zeros(p) == []
        assert len(p) == len(p.ordered_terms())
    assert [m for m, _ in ((x + lam) * (x - lam)).ordered_terms()] == [(2, 0), (0, 2)]
    series = egf_mul(EgfSeries.exp_series(x, 5), EgfSeries.exp_series(-x, 5))
    assert all(stored_zeros(c) == [] for c in series.coeffs)
    assert series == EgfSeries.identity(5)
