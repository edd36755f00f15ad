import itertools

import pytest

from degenstir import oracle
from degenstir.algebra import MultiPoly
from degenstir.common import ParameterError
from degenstir.stirling import stirling2, stirling2_poly
from degenstir.whitney import (WhitneyParams, deg_whitney, deg_whitney_unnormalised, deg_whitney_gf,
                               deg_whitney_table, deg_whitney_via_s1, whitney, whitney_basis_identity,
                               whitney_table, whitney_via_difference)

lam = MultiPoly.lam()

GRID = [WhitneyParams(m, r) for m, r in itertools.product([1, 2, 3], [0, 1, 2])]


def test_params_validated() -> None:
    with pytest.raises(ParameterError):
        WhitneyParams(0, 1)
    with pytest.raises(ParameterError):
        WhitneyParams(1, -1)


def test_anchor_values() -> None:
    p = WhitneyParams(2, 1)
    assert whitney(2, 1, p) == 4
    assert deg_whitney(2, 1, p) == 4 - lam
    assert deg_whitney(2, 1, p).render() == "4 - l"
    # the unnormalised closed form is off by mᵏ
    assert deg_whitney_unnormalised(2, 1, p) == 8 - lam.scale(2)


def test_generating_function_before_scaling() -> None:
    series = oracle.build(oracle.SeriesFamily("deg_whitney_gf", k=1, m=2, r=1), 2)
    assert series.coeffs[2].scale(2) == 8 - lam.scale(2)


def test_specialisations() -> None:
    for n in range(8):
        for k in range(n + 1):
            assert whitney(n, k, WhitneyParams(1, 0)) == stirling2(n, k)
            for r in range(3):
                assert whitney(n, k, WhitneyParams(1, r)) == stirling2_poly(n, k).specialize(x_val=r)


@pytest.mark.parametrize("p", GRID)
def test_classical_routes_agree(p: WhitneyParams) -> None:
    n_max = 7
    table = whitney_table(n_max, p)
    for k in range(n_max + 1):
        gf = oracle.coefficients(oracle.SeriesFamily("whitney_gf", k=k, m=p.m, r=p.r), n_max)
        for n in range(n_max + 1):
            assert whitney_via_difference(n, k, p) == whitney(n, k, p)
            assert gf[n] == whitney(n, k, p)
            if k <= n:
                assert table[n][k] == whitney(n, k, p)


@pytest.mark.parametrize("p", GRID)
def test_basis_identity(p: WhitneyParams) -> None:
    for n in range(7):
        lhs, rhs = whitney_basis_identity(n, p)
        assert lhs == rhs


@pytest.mark.parametrize("p", GRID)
def test_degenerate_routes_agree(p: WhitneyParams) -> None:
    n_max = 6
    table = deg_whitney_table(n_max, p)
    for k in range(n_max + 1):
        gf = deg_whitney_gf(n_max, k, p)
        for n in range(k, n_max + 1):
            value = deg_whitney(n, k, p)
            assert gf[n - k] == value
            assert deg_whitney_via_s1(n, k, p) == value
            assert table[n][k] == value
            assert value.specialize(lambda_val=0) == whitney(n, k, p)


def test_below_diagonal_is_zero() -> None:
    p = WhitneyParams(2, 1)
    assert whitney(1, 2, p) == 0
    assert whitney_via_difference(1, 2, p) == 0
    assert deg_whitney(1, 2, p) == 0
    assert deg_whitney_via_s1(1, 2, p) == 0
