"""Classical Stirling numbers and the Stirling polynomials S₂(n,k|x)."""

from __future__ import annotations

import logging
import math
import threading
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .algebra import MultiPoly, poly_sum
from .common import Rational, check_index

logger = logging.getLogger(__name__)


class StirlingKind(Enum):
    FIRST = "first"
    SECOND = "second"


class StirlingTable:
    """Memoized Stirling triangle, grown row by row on demand.

    The first kind is signed and follows ``S₁(n+1,k) = S₁(n,k−1) − n·S₁(n,k)``;
    the second kind follows ``S₂(n+1,k) = k·S₂(n,k) + S₂(n,k−1)``. Both are
    seeded with S(0,0) = 1. Rows are only ever appended, under a lock, so
    concurrent readers see complete rows.
    """

    def __init__(self, kind: StirlingKind) -> None:
        self.kind = kind
        self._rows: list[tuple[Fraction, ...]] = [(Fraction(1),)]
        self._lock = threading.Lock()

    def _next_row(self, n: int, row: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
        # builds row n+1 from row n
        def at(k: int) -> Fraction:
            return row[k] if 0 <= k <= n else Fraction(0)

        if self.kind is StirlingKind.FIRST:
            return tuple(at(k - 1) - n * at(k) for k in range(n + 2))
        return tuple(k * at(k) + at(k - 1) for k in range(n + 2))

    def _grow(self, n: int) -> None:
        with self._lock:
            start = len(self._rows)
            while len(self._rows) <= n:
                m = len(self._rows) - 1
                self._rows.append(self._next_row(m, self._rows[m]))
            if len(self._rows) > start:
                logger.debug("Stirling %s table grown to %d rows", self.kind.value, len(self._rows))

    def row(self, n: int) -> tuple[Fraction, ...]:
        check_index("n", n)
        if n >= len(self._rows):
            self._grow(n)
        return self._rows[n]

    def __call__(self, n: int, k: int) -> Rational:
        check_index("k", k)
        row = self.row(n)
        return row[k] if k <= n else Fraction(0)


_first = StirlingTable(StirlingKind.FIRST)
_second = StirlingTable(StirlingKind.SECOND)


def stirling1(n: int, k: int) -> Rational:
    """Signed Stirling number of the first kind."""
    return _first(n, k)


def stirling2(n: int, k: int) -> Rational:
    return _second(n, k)


def falling_factorial(n: int) -> MultiPoly:
    """``(x)ₙ = x(x−1)⋯(x−n+1)``."""
    check_index("n", n)
    result = MultiPoly.one()
    x = MultiPoly.x()
    for i in range(n):
        result = result * (x - i)
    return result


def stirling1_from_falling(n: int, k: int) -> Rational:
    """The coefficient of xᵏ in (x)ₙ."""
    check_index("k", k)
    return falling_factorial(n).coefficient(k)


@lru_cache(maxsize=None)
def stirling2_poly(n: int, k: int) -> MultiPoly:
    """``S₂(n,k|x) = Σ_{l=k}^{n} C(n,l)·S₂(l,k)·x^{n−l}``; zero when n < k."""
    check_index("n", n)
    check_index("k", k)
    return MultiPoly({(n - l, 0): math.comb(n, l) * stirling2(l, k) for l in range(k, n + 1)})


def stirling2_poly_table(n_max: int) -> list[list[MultiPoly]]:
    """Rows 0..n_max of S₂(n,k|x) built by ``(x+k)S₂(n,k|x) + S₂(n,k−1|x)``.

    The k = 0 column is xⁿ and the diagonal is 1.
    """
    check_index("n_max", n_max)
    x = MultiPoly.x()
    rows: list[list[MultiPoly]] = [[MultiPoly.one()]]
    for n in range(n_max):
        prev = rows[n]
        row = [x ** (n + 1)]
        row += [(x + k) * prev[k] + prev[k - 1] for k in range(1, n + 1)]
        row.append(MultiPoly.one())
        rows.append(row)
    return rows


def falling_basis_expansion(n: int) -> MultiPoly:
    """``Σ_l S₂(n,l)·(x)_l``, which must reproduce xⁿ."""
    return poly_sum(falling_factorial(l).scale(stirling2(n, l)) for l in range(n + 1))
