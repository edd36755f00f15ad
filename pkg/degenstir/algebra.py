#     degenstir - exact degenerate Stirling, Whitney and Carlitz computations
#     Copyright (C) 2024 - degenstir contributors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#    http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact arithmetic substrate.

Rationals are :class:`fractions.Fraction`. :class:`MultiPoly` is the sparse
polynomial ring in the two formal variables ``x`` and ``λ`` over the rationals,
and :class:`EgfSeries` is a truncated exponential generating function whose
coefficients live in that ring.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Optional, Union
from typing_extensions import TypeAlias

from .common import Rational, check_index

Monomial: TypeAlias = tuple[int, int]  # (deg_x, deg_λ)
Scalar: TypeAlias = Union[int, Fraction]


class OrderMismatchError(ValueError):
    """Two series with different truncation orders were combined."""


class NotAUnitError(ValueError):
    """The constant term of a series is not an invertible rational."""


class NotNilpotentError(ValueError):
    """The exponential of a series with nonzero constant term was requested."""


class CoefficientRangeError(ValueError):
    """A coefficient beyond the truncation order was requested."""


_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Rational:
    """Parses ``p`` or ``p/q``. Decimal and float notation are rejected."""
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ValueError(f"Not an exact rational: {text!r} (expected p or p/q)")
    num, den = match.group(1), match.group(2)
    if den is not None and int(den) == 0:
        raise ValueError(f"Zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(q: Scalar) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class MultiPoly:
    """A polynomial in ``x`` and ``λ`` with rational coefficients.

    Terms are kept in a dict from ``(deg_x, deg_λ)`` to a nonzero
    :class:`~fractions.Fraction`; the zero polynomial is the empty dict.
    Instances are never mutated after construction.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Monomial, Scalar]] = None) -> None:
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for (i, j), c in terms.items():
                if i < 0 or j < 0:
                    raise ValueError(f"Negative exponent in monomial {(i, j)}")
                c = Fraction(c)
                if c != 0:
                    clean[(i, j)] = c
        self._terms = clean
        self._hash: Optional[int] = None

    @classmethod
    def _from_clean(cls, terms: dict[Monomial, Fraction]) -> MultiPoly:
        # Internal fast path: caller guarantees no zero coefficients.
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    # -- generators -------------------------------------------------------

    @classmethod
    def const(cls, c: Scalar) -> MultiPoly:
        return cls({(0, 0): c})

    @classmethod
    def zero(cls) -> MultiPoly:
        return cls._from_clean({})

    @classmethod
    def one(cls) -> MultiPoly:
        return cls.const(1)

    @classmethod
    def x(cls) -> MultiPoly:
        return cls({(1, 0): 1})

    @classmethod
    def lam(cls) -> MultiPoly:
        return cls({(0, 1): 1})

    @classmethod
    def coerce(cls, value: Union[MultiPoly, Scalar]) -> MultiPoly:
        if isinstance(value, MultiPoly):
            return value
        return cls.const(value)

    # -- inspection -------------------------------------------------------

    def coefficient(self, deg_x: int, deg_lambda: int = 0) -> Fraction:
        return self._terms.get((deg_x, deg_lambda), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(m == (0, 0) for m in self._terms)

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial; raises if it still has x or λ."""
        if not self.is_constant():
            raise ValueError(f"Polynomial {self} is not a constant")
        return self.coefficient(0, 0)

    def has_x(self) -> bool:
        return any(i > 0 for i, _ in self._terms)

    def has_lambda(self) -> bool:
        return any(j > 0 for _, j in self._terms)

    def degree_x(self) -> int:
        return max((i for i, _ in self._terms), default=-1)

    def degree_lambda(self) -> int:
        return max((j for _, j in self._terms), default=-1)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- ring operations --------------------------------------------------

    def __add__(self, other: Union[MultiPoly, Scalar]) -> MultiPoly:
        other = MultiPoly.coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return MultiPoly._from_clean(out)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly._from_clean({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Union[MultiPoly, Scalar]) -> MultiPoly:
        return self + (-MultiPoly.coerce(other))

    def __rsub__(self, other: Scalar) -> MultiPoly:
        return MultiPoly.coerce(other) - self

    def scale(self, c: Scalar) -> MultiPoly:
        c = Fraction(c)
        if c == 0:
            return MultiPoly.zero()
        return MultiPoly._from_clean({m: v * c for m, v in self._terms.items()})

    def __mul__(self, other: Union[MultiPoly, Scalar]) -> MultiPoly:
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        if not self._terms or not other._terms:
            return MultiPoly.zero()
        out: dict[Monomial, Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                m = (i1 + i2, j1 + j2)
                out[m] = out.get(m, 0) + c1 * c2
        return MultiPoly._from_clean({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, c: Scalar) -> MultiPoly:
        c = Fraction(c)
        if c == 0:
            raise ZeroDivisionError("Polynomial division by zero")
        return self.scale(1 / c)

    def __pow__(self, k: int) -> MultiPoly:
        check_index("exponent", k)
        result = MultiPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == MultiPoly.const(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            # constants compare equal to the rational they hold
            if self.is_constant():
                self._hash = hash(self.coefficient(0, 0))
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- evaluation -------------------------------------------------------

    def specialize(self, x_val: Optional[Scalar] = None, lambda_val: Optional[Scalar] = None) -> MultiPoly:
        """Substitutes the given values; a variable left as None stays formal."""
        if x_val is None and lambda_val is None:
            return self
        out: dict[Monomial, Fraction] = {}
        for (i, j), c in self._terms.items():
            if x_val is not None:
                c = c * Fraction(x_val) ** i
                i = 0
            if lambda_val is not None:
                c = c * Fraction(lambda_val) ** j
                j = 0
            if c:
                out[(i, j)] = out.get((i, j), 0) + c
        return MultiPoly._from_clean({m: c for m, c in out.items() if c})

    # -- text form --------------------------------------------------------

    def ordered_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in canonical print order: deg_x descending, then deg_λ ascending."""
        return sorted(self._terms.items(), key=lambda t: (-t[0][0], t[0][1]))

    def render(self, unicode: bool = False) -> str:
        if not self._terms:
            return "0"
        lam = "λ" if unicode else "l"
        pieces: list[str] = []
        for n, ((i, j), c) in enumerate(self.ordered_terms()):
            factors = []
            if j:
                factors.append(lam if j == 1 else f"{lam}^{j}")
            if i:
                factors.append("x" if i == 1 else f"x^{i}")
            monomial = "*".join(factors)
            mag = abs(c)
            if not monomial:
                body = format_rational(mag)
            elif mag == 1:
                body = monomial
            else:
                body = f"{format_rational(mag)}*{monomial}"
            if n == 0:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"MultiPoly({self.render()!r})"


def poly_specialize(p: MultiPoly, x_val: Optional[Scalar] = None,
                    lambda_val: Optional[Scalar] = None) -> MultiPoly:
    return p.specialize(x_val, lambda_val)


CoeffFn: TypeAlias = Callable[[int], Union[MultiPoly, Scalar]]


@dataclass(frozen=True)
class EgfSeries:
    """Truncated exponential generating function ``Σ cₙ tⁿ/n! + O(t^{N+1})``.

    `order` is the truncation order N and `coeffs` holds exactly N+1
    polynomial coefficients c₀..c_N.
    """
    order: int
    coeffs: tuple[MultiPoly, ...]

    def __post_init__(self) -> None:
        check_index("order", self.order)
        if len(self.coeffs) != self.order + 1:
            raise ValueError(f"Series of order {self.order} needs {self.order + 1} "
                             f"coefficients, got {len(self.coeffs)}")

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[Union[MultiPoly, Scalar]]) -> EgfSeries:
        cs = tuple(MultiPoly.coerce(c) for c in coeffs)
        return cls(len(cs) - 1, cs)

    @classmethod
    def generate(cls, order: int, coeff: CoeffFn) -> EgfSeries:
        """Builds the series whose n-th coefficient is ``coeff(n)``."""
        check_index("order", order)
        return cls(order, tuple(MultiPoly.coerce(coeff(n)) for n in range(order + 1)))

    @classmethod
    def identity(cls, order: int) -> EgfSeries:
        return cls.generate(order, lambda n: 1 if n == 0 else 0)

    @classmethod
    def zero(cls, order: int) -> EgfSeries:
        return cls.generate(order, lambda n: 0)

    @classmethod
    def exp_series(cls, a: Union[MultiPoly, Scalar], order: int) -> EgfSeries:
        """The series of ``e^{at}``, i.e. cₙ = aⁿ."""
        a = MultiPoly.coerce(a)
        coeffs = [MultiPoly.one()]
        for _ in range(order):
            coeffs.append(coeffs[-1] * a)
        return cls(order, tuple(coeffs))

    def coeff(self, n: int) -> MultiPoly:
        return egf_coeff(self, n)

    def _check_order(self, other: EgfSeries) -> None:
        if self.order != other.order:
            raise OrderMismatchError(f"Cannot combine series of orders {self.order} and {other.order}")

    def __add__(self, other: EgfSeries) -> EgfSeries:
        self._check_order(other)
        return EgfSeries(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: EgfSeries) -> EgfSeries:
        self._check_order(other)
        return EgfSeries(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> EgfSeries:
        return EgfSeries(self.order, tuple(-a for a in self.coeffs))

    def scale(self, c: Union[MultiPoly, Scalar]) -> EgfSeries:
        return EgfSeries(self.order, tuple(a * c for a in self.coeffs))

    def __mul__(self, other: EgfSeries) -> EgfSeries:
        return egf_mul(self, other)

    def __pow__(self, k: int) -> EgfSeries:
        return egf_pow(self, k)

    def specialize(self, x_val: Optional[Scalar] = None, lambda_val: Optional[Scalar] = None) -> EgfSeries:
        return EgfSeries(self.order, tuple(c.specialize(x_val, lambda_val) for c in self.coeffs))

    def __iter__(self) -> Iterator[MultiPoly]:
        return iter(self.coeffs)


def egf_mul(a: EgfSeries, b: EgfSeries) -> EgfSeries:
    """EGF (binomial) convolution: cₙ = Σ C(n,i)·aᵢ·b_{n−i}."""
    a._check_order(b)
    coeffs = []
    for n in range(a.order + 1):
        acc = MultiPoly.zero()
        for i in range(n + 1):
            ai, bj = a.coeffs[i], b.coeffs[n - i]
            if ai and bj:
                acc = acc + (ai * bj).scale(math.comb(n, i))
        coeffs.append(acc)
    return EgfSeries(a.order, tuple(coeffs))


def egf_inverse(a: EgfSeries) -> EgfSeries:
    """The multiplicative inverse of `a` modulo t^{N+1}."""
    c0 = a.coeffs[0]
    if c0.is_zero() or not c0.is_constant():
        raise NotAUnitError(f"Constant term {c0} is not an invertible rational")
    inv0 = 1 / c0.constant_value()
    out = [MultiPoly.const(inv0)]
    for n in range(1, a.order + 1):
        acc = MultiPoly.zero()
        for i in range(1, n + 1):
            ai = a.coeffs[i]
            if ai:
                acc = acc + (ai * out[n - i]).scale(math.comb(n, i))
        out.append(acc.scale(-inv0))
    return EgfSeries(a.order, tuple(out))


def egf_exp(a: EgfSeries) -> EgfSeries:
    """``Σ_{j=0}^{N} aʲ/j!`` for a series with zero constant term.

    Evaluated Horner style, ``1 + a(1 + a/2(1 + a/3(...)))``; the sum is
    finite because a^{N+1} vanishes modulo t^{N+1}.
    """
    if not a.coeffs[0].is_zero():
        raise NotNilpotentError(f"Constant term {a.coeffs[0]} must be zero to exponentiate")
    one = EgfSeries.identity(a.order)
    result = one
    for j in range(a.order, 0, -1):
        result = one + egf_mul(a, result).scale(Fraction(1, j))
    return result


def egf_pow(a: EgfSeries, k: int) -> EgfSeries:
    check_index("exponent", k)
    result = EgfSeries.identity(a.order)
    for _ in range(k):
        result = egf_mul(result, a)
    return result


def egf_coeff(a: EgfSeries, n: int) -> MultiPoly:
    if not 0 <= n <= a.order:
        raise CoefficientRangeError(f"Coefficient {n} requested from a series of order {a.order}")
    return a.coeffs[n]


def poly_sum(polys: Iterable[Union[MultiPoly, Scalar]]) -> MultiPoly:
    total = MultiPoly.zero()
    for p in polys:
        total = total + p
    return total
