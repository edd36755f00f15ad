import pytest

from degenstir import oracle
from degenstir.algebra import EgfSeries
from degenstir.common import ParameterError, setting


def test_every_family_builds() -> None:
    for tag in oracle.FAMILIES:
        series = oracle.build(oracle.SeriesFamily(tag, k=1), 5)
        assert series.order == 5


def test_stirling2_gf_k0_is_identity() -> None:
    assert oracle.build(oracle.SeriesFamily("stirling2_gf", k=0), 6) == EgfSeries.identity(6)


def test_log_power() -> None:
    assert oracle.coefficients(oracle.SeriesFamily("stirling1_gf", k=1), 3) == [0, 1, -1, 2]


def test_whitney_reduces_to_stirling() -> None:
    family = oracle.SeriesFamily("whitney_gf", k=2, m=1, r=0)
    assert oracle.coefficients(family, 4) == [0, 0, 1, 3, 7]


@pytest.mark.parametrize("tag", sorted(oracle.FAMILIES))
def test_prefix_extension(tag: str) -> None:
    family = oracle.SeriesFamily(tag, k=2, m=2, r=1, order_r=2)
    low = oracle.coefficients(family, 6)
    high = oracle.coefficients(family, 10)
    assert high[:7] == low


def test_invalid_parameters() -> None:
    with pytest.raises(ParameterError):
        oracle.SeriesFamily("no_such_gf")
    with pytest.raises(ParameterError):
        oracle.SeriesFamily("whitney_gf", m=0)
    with pytest.raises(ParameterError):
        oracle.SeriesFamily("stirling2_gf", k=-1)
    with pytest.raises(ParameterError):
        oracle.SeriesFamily("deg_euler_r_gf", order_r=0)


def test_order_bounded() -> None:
    with pytest.raises(ParameterError):
        oracle.build(oracle.SeriesFamily("stirling2_gf", k=1), setting.MAX_ORDER + 1)


def test_specialised_coefficients() -> None:
    coeffs = oracle.coefficients(oracle.SeriesFamily("deg_stirling2_gf", k=1), 2, x=0)
    assert coeffs[2].render() == "1 - l"
    coeffs = oracle.coefficients(oracle.SeriesFamily("deg_stirling2_gf", k=1), 2, x=0, lam=1)
    assert coeffs[2] == 0
