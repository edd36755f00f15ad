from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any, Callable, Optional, Union
from typing_extensions import TypedDict

from .algebra import MultiPoly, Scalar, format_rational
from .common import OutputFormat, ParameterError, Rational, check_index, setting
from .degenerate import deg_factorial, deg_falling
from .degenerate_stirling import deg_stirling2
from .euler_bernoulli import (PolySequence, SequenceFamily, bernoulli_number, bernoulli_poly, deg_bernoulli,
                              deg_euler_higher, euler_number_from_s2, euler_poly, poly_sequence)
from .stirling import stirling1, stirling2, stirling2_poly
from .whitney import WhitneyParams, deg_whitney, whitney

Value = Union[MultiPoly, Scalar]


@dataclass(frozen=True)
class FamilyParams:
    m: int = 1
    r: int = 0
    order_r: int = 1
    x: Optional[Rational] = None
    lam: Optional[Rational] = None

    @property
    def whitney_params(self) -> WhitneyParams:
        return WhitneyParams(self.m, self.r)

    def to_dict(self) -> dict[str, Any]:
        def opt(q: Optional[Rational]) -> Optional[str]:
            return None if q is None else format_rational(q)
        return {"m": self.m, "r": self.r, "order_r": self.order_r, "x": opt(self.x), "lambda": opt(self.lam)}


class FamilyData(TypedDict):
    text: str
    triangular: bool
    value: Callable[[int, int, FamilyParams], Value]
    # the whole column 0..n_max from one series, for tables
    sequence: Optional[Callable[[int, FamilyParams], PolySequence]]


FAMILIES: dict[str, FamilyData] = {
    "s1": {"text": "Signed Stirling numbers of the first kind S1(n,k)", "triangular": True,
           "value": lambda n, k, p: stirling1(n, k), "sequence": None},
    "s2": {"text": "Stirling numbers of the second kind S2(n,k)", "triangular": True,
           "value": lambda n, k, p: stirling2(n, k), "sequence": None},
    "s2poly": {"text": "Stirling polynomials S2(n,k|x)", "triangular": True,
               "value": lambda n, k, p: stirling2_poly(n, k), "sequence": None},
    "s2lambda": {"text": "Degenerate Stirling polynomials S2,l(n,k|x)", "triangular": True,
                 "value": lambda n, k, p: deg_stirling2(n, k), "sequence": None},
    "whitney": {"text": "r-Whitney numbers W_{m,r}(n,k)", "triangular": True,
                "value": lambda n, k, p: whitney(n, k, p.whitney_params), "sequence": None},
    "whitney-deg": {"text": "Degenerate r-Whitney numbers W_{m,r}(n,k|l)", "triangular": True,
                    "value": lambda n, k, p: deg_whitney(n, k, p.whitney_params), "sequence": None},
    "bernoulli": {"text": "Bernoulli polynomials B_n(x)", "triangular": False,
                  "value": lambda n, k, p: bernoulli_poly(n),
                  "sequence": lambda n_max, p: poly_sequence(SequenceFamily.BERNOULLI, n_max)},
    "bernoulli-number": {"text": "Bernoulli numbers B_n", "triangular": False,
                         "value": lambda n, k, p: bernoulli_number(n), "sequence": None},
    "euler": {"text": "Euler polynomials E_n(x)", "triangular": False,
              "value": lambda n, k, p: euler_poly(n),
              "sequence": lambda n_max, p: poly_sequence(SequenceFamily.EULER, n_max)},
    "euler-number": {"text": "Euler numbers E_n = E_n(0)", "triangular": False,
                     "value": lambda n, k, p: euler_number_from_s2(n), "sequence": None},
    "deg-bernoulli": {"text": "Degenerate Bernoulli polynomials", "triangular": False,
                      "value": lambda n, k, p: deg_bernoulli(n),
                      "sequence": lambda n_max, p: poly_sequence(SequenceFamily.DEG_BERNOULLI, n_max)},
    "deg-euler": {"text": "Degenerate Euler polynomials of order r", "triangular": False,
                  "value": lambda n, k, p: deg_euler_higher(n, p.order_r),
                  "sequence": lambda n_max, p: poly_sequence(SequenceFamily.DEG_EULER_R, n_max, p.order_r)},
    "deg-falling": {"text": "Lambda-falling factorials (x)_{n,l}", "triangular": False,
                    "value": lambda n, k, p: deg_falling(MultiPoly.x(), n), "sequence": None},
    "deg-factorial": {"text": "Lambda-factorials (n)_{n,l}", "triangular": False,
                      "value": lambda n, k, p: deg_factorial(n), "sequence": None},
}


def family_value(family: str, n: int, k: Optional[int], params: FamilyParams) -> MultiPoly:
    """One value of `family`, with the requested substitutions applied."""
    if family not in FAMILIES:
        raise ParameterError(f"Unknown family {family!r}")
    data = FAMILIES[family]
    check_index("n", n)
    if data["triangular"]:
        if k is None:
            raise ParameterError(f"Family {family} needs k")
        check_index("k", k)
    value = MultiPoly.coerce(data["value"](n, k or 0, params))
    return value.specialize(params.x, params.lam)


@dataclass(frozen=True)
class TableRow:
    n: int
    k: Optional[int]
    value: str


@dataclass(frozen=True)
class Table:
    """A rendered family table; values are canonical text, never floats."""
    family: str
    params: dict[str, Any] = field(hash=False)
    rows: tuple[TableRow, ...]

    def to_dict(self) -> dict[str, Any]:
        return {
            "family": self.family,
            "params": self.params,
            "rows": [{"n": row.n, "k": row.k, "value": row.value} for row in self.rows],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)

    @classmethod
    def from_json(cls, json_str: str) -> Table:
        d = json.loads(json_str)
        rows = tuple(TableRow(r["n"], r["k"], r["value"]) for r in d["rows"])
        return cls(d["family"], d["params"], rows)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["n", "k", "value"])
        for row in self.rows:
            writer.writerow([row.n, "" if row.k is None else row.k, row.value])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = []
        for row in self.rows:
            if row.k is None:
                lines.append(f"{row.n}\t{row.value}")
            else:
                lines.append(f"{row.n}\t{row.k}\t{row.value}")
        return "\n".join(lines) + "\n" if lines else ""

    def render(self, fmt: OutputFormat) -> str:
        if fmt is OutputFormat.Json:
            return self.to_json() + "\n"
        if fmt is OutputFormat.Csv:
            return self.to_csv()
        return self.to_text()


def build_table(family: str, n_max: int, k_max: Optional[int], params: FamilyParams,
                unicode: bool = False) -> Table:
    if family not in FAMILIES:
        raise ParameterError(f"Unknown family {family!r}")
    check_index("n_max", n_max)
    setting.check_order(n_max)
    triangular = FAMILIES[family]["triangular"]
    if k_max is None:
        k_max = n_max
    check_index("k_max", k_max)

    sequence = FAMILIES[family]["sequence"]
    if sequence is not None:
        values = sequence(n_max, params)
        rows = [TableRow(n, None, values[n].specialize(params.x, params.lam).render(unicode))
                for n in range(n_max + 1)]
    elif not triangular:
        rows = [TableRow(n, None, family_value(family, n, None, params).render(unicode))
                for n in range(n_max + 1)]
    else:
        rows = [TableRow(n, k, family_value(family, n, k, params).render(unicode))
                for n in range(n_max + 1) for k in range(min(n, k_max) + 1)]
    table_params: dict[str, Any] = {"n_max": n_max, "k_max": k_max if triangular else None}
    table_params.update(params.to_dict())
    return Table(family, table_params, tuple(rows))
