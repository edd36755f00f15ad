from fractions import Fraction

import pytest

from degenstir.common import ParameterError
from degenstir.euler_bernoulli import bernoulli_poly, deg_euler_higher, poly_sequence
from degenstir.tables import FamilyParams, build_table, family_value


@pytest.fixture
def fresh_sequences() -> None:
    poly_sequence.cache_clear()


def test_sequence_family_builds_one_series(fresh_sequences: None) -> None:
    table = build_table("bernoulli", 9, None, FamilyParams())
    assert poly_sequence.cache_info().misses == 1
    assert [row.value for row in table.rows] == [bernoulli_poly(n).render() for n in range(10)]
    assert all(row.k is None for row in table.rows)


def test_sequence_family_substitutes(fresh_sequences: None) -> None:
    params = FamilyParams(order_r=2, x=Fraction(1, 2), lam=Fraction(1, 3))
    table = build_table("deg-euler", 6, None, params)
    assert poly_sequence.cache_info().misses == 1
    for row in table.rows:
        assert row.value == family_value("deg-euler", row.n, None, params).render()
        assert row.value == deg_euler_higher(row.n, 2).specialize(Fraction(1, 2), Fraction(1, 3)).render()


def test_triangular_table_respects_k_max() -> None:
    table = build_table("s2", 5, 2, FamilyParams())
    assert max(row.k or 0 for row in table.rows) == 2
    assert len(table.rows) == 1 + 2 + 3 * 4
    assert table.params["k_max"] == 2


def test_table_checks_order() -> None:
    with pytest.raises(ParameterError):
        build_table("bernoulli", 10_000, None, FamilyParams())
    with pytest.raises(ParameterError):
        build_table("nope", 3, None, FamilyParams())
