"""Re-derivation of the hypergeometric combination coefficients.

For fixed genus the closed-form count is a linear combination of finitely
many terminating 2F1 values whose coefficients depend on nu but not on the
vertex count.  Feeding the first 3g (two-legged) or 3g-2 (regular)
symbolically-computed count rows into that combination therefore yields a
square linear system over Q(nu); solving it exactly turns the structural
formula into a fully explicit one.  The solved tables are certificates,
not fits: they must match the golden tables bit for bit, and they must keep
reproducing count rows far beyond those used to build the system.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Optional

from .exact import (
    PolyNu,
    RatFuncNu,
    binom_int,
    linsolve,
    pochhammer,
)
from .series import SeriesTable, build_tables


@dataclass(frozen=True)
class CoeffTable:
    """Solved combination coefficients for one (kind, genus)."""

    kind: str  # "a" = two-legged, "b" = regular
    g: int
    entries: dict[int, RatFuncNu]

    def __post_init__(self):
        expected = 3 * self.g if self.kind == "a" else 3 * self.g - 2
        if sorted(self.entries) != list(range(expected)):
            raise ValueError(
                f"kind {self.kind} genus {self.g} needs entries 0..{expected - 1}")

    @property
    def count_kind(self) -> str:
        return "two-legged" if self.kind == "a" else "regular"


def _row_entry(kind: str, g: int, j: int, el: int) -> PolyNu:
    """One matrix entry, cleared by (1-nu)^j so it is polynomial in nu.

    The entry is d_l * 2F1(-j, B(nu); c; 1/(1-nu)) with B = -nu*j for kind a
    and 1 - nu*j for kind b; clearing the argument denominator multiplies
    term k by (1-nu)^(j-k).
    """
    if kind == "a":
        d = binom_int(2 * (g + 1) + el + j - 4, j)
        c = 2 - 2 * g - (el + j)
        b_lin = PolyNu([0, -j])  # -nu*j
    else:
        d = binom_int(2 * g + el + j - 4, j)
        c = 4 - 2 * g - (el + j)
        b_lin = PolyNu([1, -j])  # 1 - nu*j
    one_minus_nu = PolyNu([1, -1])
    total = PolyNu()
    upper_num = PolyNu([1])  # (B)_k, polynomial in nu
    for k in range(j + 1):
        if k > 0:
            upper_num = upper_num * (b_lin + (k - 1))
        ck = pochhammer(c, k)
        if ck == 0:
            # in scope the first vanishing index sits past the termination
            raise AssertionError(
                f"lower Pochhammer vanished in scope: kind={kind} g={g} "
                f"j={j} l={el} k={k}")
        w = pochhammer(-j, k) / (ck * math.factorial(k))
        total = total + upper_num * w * one_minus_nu ** (j - k)
    return total * d


def build_system(kind: str, g: int,
                 table: SeriesTable) -> tuple[list[list[RatFuncNu]], list[RatFuncNu]]:
    """Square system rows j = 1..3g (kind a) or 1..3g-2 (kind b).

    Rows are cleared by (1-nu)^j, which also cancels the (nu-1)^j prefactor
    of the closed form against the table normalization up to the sign (-1)^j.
    """
    if kind == "a":
        if g < 1:
            raise ValueError("kind a needs g >= 1")
        n = 3 * g
        if table.kind != "rec":
            raise ValueError("kind a solves against the recurrence table")
    elif kind == "b":
        if g < 2:
            raise ValueError("kind b needs g >= 2")
        n = 3 * g - 2
        if table.kind != "free":
            raise ValueError("kind b solves against the free-energy table")
    else:
        raise ValueError(f"unknown kind {kind!r}")
    matrix = []
    rhs = []
    for j in range(1, n + 1):
        matrix.append([RatFuncNu(_row_entry(kind, g, j, el)) for el in range(n)])
        rhs.append(table.coeff(g, j) * Fraction((-1) ** j))
    return matrix, rhs


def solve_coeffs(kind: str, g: int,
                 table: Optional[SeriesTable] = None) -> CoeffTable:
    """Exact coefficient table for one (kind, genus).

    Builds the series table on demand when none is supplied.  A singular
    system would falsify the whole construction and is left fatal.  Every
    solved entry must reduce to polynomial over a rational constant.
    """
    if table is None:
        n = 3 * g if kind == "a" else 3 * g - 2
        rec, free = build_tables(g, n)
        table = rec if kind == "a" else free
    matrix, rhs = build_system(kind, g, table)
    solution = linsolve(matrix, rhs)
    entries = {}
    for el, value in enumerate(solution):
        if value.den.degree != 0:
            raise AssertionError(
                f"coefficient {kind}[{g}][{el}] has nonconstant denominator: "
                f"{value!r}")
        entries[el] = value
    return CoeffTable(kind, g, entries)


# ---------------------------------------------------------------------------
# JSON round trip and golden tables
# ---------------------------------------------------------------------------

def _entry_json(value: RatFuncNu) -> dict:
    poly = value.num * (1 / value.den.coeffs[0])
    den = 1
    for c in poly.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return {"num_coeffs": [int(c * den) for c in poly.coeffs], "den": str(den)}


def _entry_from_json(data: dict) -> RatFuncNu:
    return RatFuncNu(PolyNu(data["num_coeffs"]) * Fraction(1, int(data["den"])))


def save_table(table: CoeffTable, fp) -> None:
    json.dump({"kind": table.kind, "g": table.g,
               "entries": {str(el): _entry_json(v)
                           for el, v in sorted(table.entries.items())}},
              fp, indent=1)


def load_table(fp) -> CoeffTable:
    data = json.load(fp)
    return CoeffTable(data["kind"], int(data["g"]),
                      {int(el): _entry_from_json(v)
                       for el, v in data["entries"].items()})


def golden_coeff_table(kind: str, g: int) -> CoeffTable:
    """Golden coefficient table shipped with the package (a: g=1..4, b: g=2..4)."""
    name = f"golden_coeff_{kind}.json"
    text = resources.files("mapcount.data").joinpath(name).read_text()
    tables = json.loads(text)["tables"]
    if str(g) not in tables:
        raise KeyError(f"no golden {kind}-table for g={g}")
    return CoeffTable(kind, g, {int(el): _entry_from_json(v)
                                for el, v in tables[str(g)].items()})
