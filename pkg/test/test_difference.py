import math
import random
from fractions import Fraction

import pytest

from degenstir.algebra import MultiPoly
from degenstir.common import ParameterError
from degenstir.difference import (WrongVariableError, binomial_poly, delta_at_zero, delta_power,
                                  delta_rational, newton_expand, newton_reconstruct)
from degenstir.stirling import stirling2

x = MultiPoly.x()


def test_delta_power_examples() -> None:
    assert delta_power(0, 3) == x ** 3
    assert delta_power(1, 2) == x.scale(2) + 1
    assert delta_power(2, 3) == x.scale(6) + 6
    assert delta_power(0, 0) == 1


def test_delta_at_zero_is_raw() -> None:
    assert delta_at_zero(2, 3) == 6
    assert delta_at_zero(3, 2) == 0
    assert delta_at_zero(0, 0) == 1


@pytest.mark.parametrize("n", range(9))
def test_delta_at_zero_counts_partitions(n: int) -> None:
    for k in range(n + 3):
        assert delta_at_zero(k, n) / math.factorial(k) == stirling2(n, k)


def test_delta_rational_agrees_with_polynomial() -> None:
    for k in range(4):
        for j in range(5):
            for base in (Fraction(0), Fraction(1, 3), Fraction(-5, 2)):
                assert delta_rational(k, j, base) == delta_power(k, j).specialize(x_val=base).constant_value()


def test_newton_roundtrip() -> None:
    f = x ** 3 - x.scale(Fraction(1, 2)) + 7
    expansion = newton_expand(f)
    assert len(expansion) == 4
    assert expansion.diffs[0] == 7
    assert newton_reconstruct(expansion) == f
    assert expansion.reconstruct() == f


def test_newton_rejects_lambda() -> None:
    with pytest.raises(WrongVariableError):
        newton_expand(x + MultiPoly.lam())


def test_binomial_poly() -> None:
    assert binomial_poly(0) == 1
    assert binomial_poly(2) == (x ** 2 - x) / 2
    assert binomial_poly(3).specialize(x_val=5) == 10


def test_negative_index() -> None:
    with pytest.raises(ParameterError):
        delta_power(-1, 2)
    with pytest.raises(ParameterError):
        delta_at_zero(1, -2)


def random_poly_in_x(rng: random.Random, degree: int) -> MultiPoly:
    return MultiPoly({(i, 0): Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for i in range(degree + 1)})


def delta_termwise(k: int, f: MultiPoly) -> MultiPoly:
    total = MultiPoly.zero()
    for m in range(f.degree_x() + 1):
        total = total + delta_power(k, m).scale(f.coefficient(m))
    return total


def delta_pointwise(k: int, f: MultiPoly, at: Fraction) -> Fraction:
    return sum((math.comb(k, l) * (-1) ** (k - l) * f.specialize(x_val=at + l).constant_value()
                for l in range(k + 1)), Fraction(0))


@pytest.mark.parametrize("seed", range(12))
def test_delta_is_linear(seed: int) -> None:
    rng = random.Random(seed)
    f = random_poly_in_x(rng, rng.randint(0, 10))
    g = random_poly_in_x(rng, rng.randint(0, 10))
    alpha, beta = Fraction(rng.randint(-4, 4), 3), Fraction(rng.randint(-4, 4), 5)
    for k in range(5):
        whole = delta_termwise(k, f.scale(alpha) + g.scale(beta))
        assert whole == delta_termwise(k, f).scale(alpha) + delta_termwise(k, g).scale(beta)
        for at in (Fraction(0), Fraction(-2, 3), Fraction(5, 2)):
            assert whole.specialize(x_val=at) == delta_pointwise(k, f.scale(alpha) + g.scale(beta), at)


def test_pascal_recursion() -> None:
    for m in range(1, 11):
        for k in range(1, m + 1):
            lhs = delta_power(k, m + 1)
            rhs = x * delta_power(k, m) + (delta_power(k, m) + delta_power(k - 1, m)).scale(k)
            assert lhs == rhs


@pytest.mark.parametrize("seed", range(12))
def test_newton_roundtrip_random(seed: int) -> None:
    rng = random.Random(50 + seed)
    f = random_poly_in_x(rng, rng.randint(0, 10))
    expansion = newton_expand(f)
    assert len(expansion) == f.degree_x() + 1
    assert newton_reconstruct(expansion) == f
