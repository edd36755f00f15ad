"""Identity-verification suites.

A suite expands into a grid of cells. Each cell evaluates two or more
independent computations of the same quantity and passes iff they are
exactly equal. Cells are evaluated, possibly concurrently, and reported in
grid order.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Optional, Sequence, Union
from typing_extensions import TypedDict

from . import oracle
from .algebra import MultiPoly, Scalar, format_rational
from .common import ParameterError, check_index, setting
from .degenerate import chu_vandermonde_lambda, deg_falling
from .degenerate_stirling import (deg_stirling2, deg_stirling2_gf, deg_stirling2_table,
                                  deg_stirling2_via_s1)
from .euler_bernoulli import (appell_expand, bernoulli_number, deg_bernoulli, deg_euler_closed,
                              deg_euler_higher, euler_number_from_s2, euler_poly)
from .stirling import stirling1, stirling2, stirling2_poly, stirling2_poly_table
from .whitney import (WhitneyParams, deg_whitney, deg_whitney_gf, deg_whitney_table,
                      deg_whitney_via_s1, whitney, whitney_basis_identity, whitney_table,
                      whitney_via_difference)

logger = logging.getLogger(__name__)

Value = Union[MultiPoly, Scalar]
Indices = tuple[tuple[str, str], ...]


@dataclass(frozen=True)
class SuiteParams:
    """Optional overrides; a parameter left as None is swept over its default grid."""
    m: Optional[int] = None
    r: Optional[int] = None
    order_r: Optional[int] = None

    def whitney_grid(self) -> list[WhitneyParams]:
        ms = [self.m] if self.m is not None else [1, 2, 3]
        rs = [self.r] if self.r is not None else [0, 1, 2]
        return [WhitneyParams(m, r) for m in ms for r in rs]

    def euler_orders(self) -> list[int]:
        if self.order_r is not None:
            if self.order_r < 1:
                raise ParameterError(f"order r must be at least 1, got {self.order_r}")
            return [self.order_r]
        return [1, 2, 3, 4]


@dataclass(frozen=True)
class Cell:
    indices: Indices
    labels: tuple[str, ...]
    values: tuple[MultiPoly, ...]

    @property
    def passed(self) -> bool:
        return all(v == self.values[0] for v in self.values[1:])

    def index_text(self) -> str:
        return " ".join(f"{name}={value}" for name, value in self.indices)

    def describe(self, unicode: bool = False) -> str:
        sides = ", ".join(f"{label} = {value.render(unicode)}" for label, value in zip(self.labels, self.values))
        return f"{self.index_text()}: {sides}"


@dataclass(frozen=True)
class PendingCell:
    indices: Indices
    labels: tuple[str, ...]
    compute: Callable[[], Sequence[Value]] = field(compare=False)

    def evaluate(self) -> Cell:
        return Cell(self.indices, self.labels, tuple(MultiPoly.coerce(v) for v in self.compute()))


@dataclass(frozen=True)
class SuiteReport:
    identity: str
    n_max: int
    cells: tuple[Cell, ...]

    @property
    def failures(self) -> list[Cell]:
        return [c for c in self.cells if not c.passed]

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def first_failure(self) -> Optional[Cell]:
        failures = self.failures
        return failures[0] if failures else None

    @property
    def summary(self) -> str:
        failures = self.failures
        if failures:
            return f"FAIL {len(failures)} of {len(self.cells)} cells"
        return f"PASS {len(self.cells)} cells"


def _idx(**kwargs: Value) -> Indices:
    out = []
    for name, value in kwargs.items():
        out.append((name, format_rational(value) if not isinstance(value, MultiPoly) else str(value)))
    return tuple(out)


def _whitney_idx(p: WhitneyParams, **kwargs: Value) -> Indices:
    return _idx(m=p.m, r=p.r, **kwargs)


def _triangle(n_max: int, k_min: int = 0) -> Iterator[tuple[int, int]]:
    for n in range(n_max + 1):
        for k in range(k_min, n + 1):
            yield n, k


# -- degenerate Stirling ---------------------------------------------------

def _thm1(n_max: int, params: SuiteParams) -> list[PendingCell]:
    return [PendingCell(_idx(n=n, k=k), ("closed form", "generating function"),
                        lambda n=n, k=k: (deg_stirling2(n, k), deg_stirling2_gf(n_max, k)[n - k]))
            for n, k in _triangle(n_max)]


def _thm2(n_max: int, params: SuiteParams) -> list[PendingCell]:
    return [PendingCell(_idx(n=n, k=k), ("via S1", "closed form"),
                        lambda n=n, k=k: (deg_stirling2_via_s1(n, k), deg_stirling2(n, k)))
            for n, k in _triangle(n_max)]


def _thm3(n_max: int, params: SuiteParams) -> list[PendingCell]:
    x, lam = MultiPoly.x(), MultiPoly.lam()
    table = deg_stirling2_table(n_max)

    def cell(n: int, k: int) -> tuple[Value, ...]:
        step = (x + k - lam.scale(n - 1)) * deg_stirling2(n - 1, k) + deg_stirling2(n - 1, k - 1)
        return deg_stirling2(n, k), step, table[n][k]

    return [PendingCell(_idx(n=n, k=k), ("closed form", "recurrence", "table"),
                        lambda n=n, k=k: cell(n, k))
            for n, k in _triangle(n_max, k_min=1)]


def _eq31(n_max: int, params: SuiteParams) -> list[PendingCell]:
    x = MultiPoly.x()
    table = stirling2_poly_table(n_max)

    def cell(n: int, k: int) -> tuple[Value, ...]:
        step = (x + k) * stirling2_poly(n - 1, k) + stirling2_poly(n - 1, k - 1)
        return stirling2_poly(n, k), step, table[n][k], deg_stirling2(n, k).specialize(lambda_val=0)

    return [PendingCell(_idx(n=n, k=k), ("sum", "recurrence", "table", "degenerate at l=0"),
                        lambda n=n, k=k: cell(n, k))
            for n, k in _triangle(n_max, k_min=1)]


# -- Euler -----------------------------------------------------------------

def _thm4(n_max: int, params: SuiteParams) -> list[PendingCell]:
    cells = [PendingCell(_idx(n=n, r=r), ("closed form", "series"),
                         lambda n=n, r=r: (deg_euler_closed(n, r), deg_euler_higher(n, r)))
             for r in params.euler_orders() for n in range(n_max + 1)]
    if 1 in params.euler_orders():
        cells += [PendingCell(_idx(n=n, r=1, l=0), ("closed form", "Euler polynomial"),
                              lambda n=n: (deg_euler_closed(n, 1).specialize(lambda_val=0), euler_poly(n)))
                  for n in range(n_max + 1)]
    return cells


def _eq13(n_max: int, params: SuiteParams) -> list[PendingCell]:
    return [PendingCell(_idx(n=n), ("Stirling sum", "Euler polynomial at x=0"),
                        lambda n=n: (euler_number_from_s2(n), euler_poly(n).specialize(x_val=0)))
            for n in range(n_max + 1)]


# -- Whitney ---------------------------------------------------------------

def _thm5(n_max: int, params: SuiteParams) -> list[PendingCell]:
    def cell(n: int, k: int, p: WhitneyParams) -> tuple[Value, ...]:
        gf = oracle.coefficients(oracle.SeriesFamily("whitney_gf", k=k, m=p.m, r=p.r), n_max)
        values: list[Value] = [whitney_via_difference(n, k, p), whitney(n, k, p), gf[n]]
        if p.m == 1:
            values.append(stirling2_poly(n, k).specialize(x_val=p.r))
        return tuple(values)

    def labels(p: WhitneyParams) -> tuple[str, ...]:
        base = ("difference", "sum", "generating function")
        return base + ("S2(n,k|r)",) if p.m == 1 else base

    return [PendingCell(_whitney_idx(p, n=n, k=k), labels(p),
                        lambda n=n, k=k, p=p: cell(n, k, p))
            for p in params.whitney_grid() for n, k in _triangle(n_max)]


def _eq40(n_max: int, params: SuiteParams) -> list[PendingCell]:
    def cell(n: int, k: int, p: WhitneyParams, table: list[list[Fraction]]) -> tuple[Value, ...]:
        step = (p.r + p.m * k) * whitney(n - 1, k, p) + whitney(n - 1, k - 1, p)
        return whitney(n, k, p), step, table[n][k]

    cells = []
    for p in params.whitney_grid():
        table = whitney_table(n_max, p)
        cells += [PendingCell(_whitney_idx(p, n=n, k=k), ("sum", "recurrence", "table"),
                              lambda n=n, k=k, p=p, t=table: cell(n, k, p, t))
                  for n, k in _triangle(n_max, k_min=1)]
    return cells


def _eq34(n_max: int, params: SuiteParams) -> list[PendingCell]:
    return [PendingCell(_whitney_idx(p, n=n), ("(mx+r)^n", "falling factorial expansion"),
                        lambda n=n, p=p: whitney_basis_identity(n, p))
            for p in params.whitney_grid() for n in range(n_max + 1)]


def _thm6(n_max: int, params: SuiteParams) -> list[PendingCell]:
    cells = []
    for p in params.whitney_grid():
        cells += [PendingCell(_whitney_idx(p, n=n, k=k), ("closed form", "generating function"),
                              lambda n=n, k=k, p=p: (deg_whitney(n, k, p), deg_whitney_gf(n_max, k, p)[n - k]))
                  for n, k in _triangle(n_max)]
        cells += [PendingCell(_whitney_idx(p, n=n, k=k, l=0), ("closed form", "Whitney number"),
                              lambda n=n, k=k, p=p: (deg_whitney(n, k, p).specialize(lambda_val=0), whitney(n, k, p)))
                  for n, k in _triangle(n_max)]
    return cells


def _thm7(n_max: int, params: SuiteParams) -> list[PendingCell]:
    return [PendingCell(_whitney_idx(p, n=n, k=k), ("via S1", "closed form"),
                        lambda n=n, k=k, p=p: (deg_whitney_via_s1(n, k, p), deg_whitney(n, k, p)))
            for p in params.whitney_grid() for n, k in _triangle(n_max)]


def _thm8(n_max: int, params: SuiteParams) -> list[PendingCell]:
    lam = MultiPoly.lam()

    def cell(n: int, k: int, p: WhitneyParams, table: list[list[MultiPoly]]) -> tuple[Value, ...]:
        factor = MultiPoly.const(p.r + p.m * k) - lam.scale(n - 1)
        step = factor * deg_whitney(n - 1, k, p) + deg_whitney(n - 1, k - 1, p)
        return deg_whitney(n, k, p), step, table[n][k]

    cells = []
    for p in params.whitney_grid():
        table = deg_whitney_table(n_max, p)
        cells += [PendingCell(_whitney_idx(p, n=n, k=k), ("closed form", "recurrence", "table"),
                              lambda n=n, k=k, p=p, t=table: cell(n, k, p, t))
                  for n, k in _triangle(n_max, k_min=1)]
    return cells


# -- λ-binomials -----------------------------------------------------------

VANDERMONDE_POINTS: tuple[Fraction, ...] = (Fraction(0), Fraction(1), Fraction(2), Fraction(-1, 2), Fraction(3, 2))


def _vandermonde(n_max: int, params: SuiteParams) -> list[PendingCell]:
    x = MultiPoly.x()
    return [PendingCell(_idx(n=n, y=y), ("convolution", "C(x+y,n)_l"),
                        lambda n=n, y=y: chu_vandermonde_lambda(x, y, n))
            for y in VANDERMONDE_POINTS for n in range(n_max + 1)]


# -- generating functions --------------------------------------------------

def _deg_bernoulli_appell(n: int) -> MultiPoly:
    # β_{n,λ}(x) = Σ_l C(n,l)·β_{l,λ}(0)·(x)_{n−l,λ}
    x = MultiPoly.x()
    total = MultiPoly.zero()
    for l in range(n + 1):
        total = total + deg_falling(x, n - l) * deg_bernoulli(l).specialize(x_val=0).scale(math.comb(n, l))
    return total


def _gf_master(n_max: int, params: SuiteParams) -> list[PendingCell]:
    def column(family: oracle.SeriesFamily, n: int) -> MultiPoly:
        return oracle.coefficients(family, n_max)[n]

    def fam(tag: str, **kwargs: int) -> oracle.SeriesFamily:
        return oracle.SeriesFamily(tag, **kwargs)

    closed: list[tuple[oracle.SeriesFamily, Indices, Callable[[int], Value]]] = []
    for k in range(n_max + 1):
        closed.append((fam("stirling1_gf", k=k), _idx(k=k), lambda n, k=k: stirling1(n, k)))
        closed.append((fam("stirling2_gf", k=k), _idx(k=k), lambda n, k=k: stirling2(n, k)))
        closed.append((fam("stirling2_poly_gf", k=k), _idx(k=k), lambda n, k=k: stirling2_poly(n, k)))
        closed.append((fam("deg_stirling2_gf", k=k), _idx(k=k), lambda n, k=k: deg_stirling2(n, k)))
    closed.append((fam("bernoulli_gf"), (),
                   lambda n: appell_expand([bernoulli_number(i) for i in range(n + 1)])))
    closed.append((fam("euler_gf"), (),
                   lambda n: appell_expand([euler_number_from_s2(i) for i in range(n + 1)])))
    closed.append((fam("deg_bernoulli_gf"), (), _deg_bernoulli_appell))
    for r in params.euler_orders():
        closed.append((fam("deg_euler_r_gf", order_r=r), _idx(order_r=r),
                       lambda n, r=r: deg_euler_closed(n, r)))
    for p in params.whitney_grid():
        for k in range(n_max + 1):
            closed.append((fam("whitney_gf", k=k, m=p.m, r=p.r), _whitney_idx(p, k=k),
                           lambda n, k=k, p=p: whitney(n, k, p)))
            closed.append((fam("deg_whitney_gf", k=k, m=p.m, r=p.r), _whitney_idx(p, k=k),
                           lambda n, k=k, p=p: deg_whitney(n, k, p)))

    return [PendingCell((("family", f.tag),) + idx + (("n", str(n)),), ("generating function", "closed form"),
                        lambda f=f, n=n, fn=fn: (column(f, n), fn(n)))
            for f, idx, fn in closed for n in range(n_max + 1)]


class SuiteData(TypedDict):
    text: str
    builder: Callable[[int, SuiteParams], list[PendingCell]]
    default_n_max: Optional[int]


SUITES: dict[str, SuiteData] = {
    "thm1": {"text": "Degenerate Stirling closed form against its generating function",
             "builder": _thm1, "default_n_max": 12},
    "thm2": {"text": "Degenerate Stirling via Stirling numbers of the first kind",
             "builder": _thm2, "default_n_max": 12},
    "thm3": {"text": "Degenerate Stirling recurrence",
             "builder": _thm3, "default_n_max": 12},
    "thm4": {"text": "Higher-order degenerate Euler closed form",
             "builder": _thm4, "default_n_max": 10},
    "thm5": {"text": "r-Whitney numbers by differences, sums and generating function",
             "builder": _thm5, "default_n_max": 10},
    "thm6": {"text": "Degenerate Whitney closed form against its generating function",
             "builder": _thm6, "default_n_max": 10},
    "thm7": {"text": "Degenerate Whitney via Stirling numbers of the first kind",
             "builder": _thm7, "default_n_max": 10},
    "thm8": {"text": "Degenerate Whitney recurrence",
             "builder": _thm8, "default_n_max": 10},
    "eq31": {"text": "Stirling polynomial recurrence",
             "builder": _eq31, "default_n_max": 12},
    "eq40": {"text": "r-Whitney recurrence",
             "builder": _eq40, "default_n_max": 10},
    "eq13": {"text": "Euler numbers from Stirling numbers",
             "builder": _eq13, "default_n_max": 12},
    "eq34": {"text": "(mx+r)^n in the falling factorial basis",
             "builder": _eq34, "default_n_max": 8},
    "vandermonde": {"text": "Lambda Chu-Vandermonde convolution",
                    "builder": _vandermonde, "default_n_max": 10},
    "gf-master": {"text": "Every generating function against its closed form",
                  "builder": _gf_master, "default_n_max": None},
}


def default_n_max(identity: str) -> int:
    default = SUITES[identity]["default_n_max"]
    return setting.DEFAULT_ORDER if default is None else default


def run_suite(identity: str, n_max: Optional[int] = None, params: Optional[SuiteParams] = None,
              jobs: int = 1) -> SuiteReport:
    """Runs the named suite and returns its cells in grid order."""
    if identity not in SUITES:
        raise ParameterError(f"Unknown identity {identity!r}, expected one of " + ", ".join(SUITES))
    if n_max is None:
        n_max = default_n_max(identity)
    check_index("n_max", n_max)
    setting.check_order(n_max)
    if jobs < 1:
        raise ParameterError(f"jobs must be at least 1, got {jobs}")
    params = params or SuiteParams()

    pending = SUITES[identity]["builder"](n_max, params)
    logger.info("Running %s on %d cells with %d worker(s)", identity, len(pending), jobs)
    if jobs == 1:
        cells = [p.evaluate() for p in pending]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            cells = list(executor.map(PendingCell.evaluate, pending))

    report = SuiteReport(identity, n_max, tuple(cells))
    if report.first_failure is not None:
        logger.warning("%s failed at %s", identity, report.first_failure.index_text())
    logger.info("%s: %s", identity, report.summary)
    return report
