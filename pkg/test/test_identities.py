import pytest

from degenstir.algebra import MultiPoly
from degenstir.common import ParameterError, setting
from degenstir.identities import (SUITES, Cell, SuiteParams, SuiteReport, default_n_max, run_suite)

SMALL_GRID = {
    "thm1": 6, "thm2": 6, "thm3": 6, "thm4": 5, "thm5": 5, "thm6": 5, "thm7": 5, "thm8": 5,
    "eq31": 6, "eq40": 5, "eq13": 8, "eq34": 5, "vandermonde": 6, "gf-master": 5,
}


@pytest.mark.parametrize("identity", sorted(SUITES))
def test_suite_passes(identity: str) -> None:
    report = run_suite(identity, SMALL_GRID[identity])
    assert report.passed, report.first_failure and report.first_failure.describe()
    assert report.summary == f"PASS {len(report.cells)} cells"


def test_thm3_cell_count() -> None:
    report = run_suite("thm3", 12)
    assert report.summary == "PASS 78 cells"


def test_thm1_at_zero() -> None:
    report = run_suite("thm1", 0)
    assert report.summary == "PASS 1 cells"
    assert report.cells[0].indices == (("n", "0"), ("k", "0"))


def test_triangle_counts() -> None:
    assert len(run_suite("thm1", 4).cells) == 15
    assert len(run_suite("eq31", 4).cells) == 10


def test_whitney_parameters_restrict_grid() -> None:
    report = run_suite("thm6", 4, SuiteParams(m=2, r=1))
    assert report.passed
    # closed form against generating function, then the λ = 0 limit
    assert len(report.cells) == 2 * 15
    assert all(dict(c.indices)["m"] == "2" for c in report.cells)


def test_parallel_matches_serial() -> None:
    serial = run_suite("thm7", 4, SuiteParams(m=3))
    parallel = run_suite("thm7", 4, SuiteParams(m=3), jobs=4)
    assert serial == parallel


def test_defaults() -> None:
    assert default_n_max("thm3") == 12
    assert default_n_max("eq34") == 8
    assert default_n_max("gf-master") == setting.DEFAULT_ORDER


def test_failure_report() -> None:
    one, two = MultiPoly.one(), MultiPoly.const(2)
    cells = (Cell((("n", "0"),), ("a", "b"), (one, one)),
             Cell((("n", "1"),), ("a", "b"), (one, two)),
             Cell((("n", "2"),), ("a", "b"), (two, one)))
    report = SuiteReport("demo", 2, cells)
    assert not report.passed
    assert report.summary == "FAIL 2 of 3 cells"
    assert report.first_failure is cells[1]
    assert report.first_failure.describe() == "n=1: a = 1, b = 2"


def test_bad_requests() -> None:
    with pytest.raises(ParameterError):
        run_suite("thm9", 3)
    with pytest.raises(ParameterError):
        run_suite("thm1", -1)
    with pytest.raises(ParameterError):
        run_suite("thm1", 3, jobs=0)
    with pytest.raises(ParameterError):
        run_suite("thm4", 3, SuiteParams(order_r=0))
