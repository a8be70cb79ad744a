"""Graph counts from the series tables.

A two-legged count is c_nu^j times a polynomial in nu; a regular count is
C_nu^j (Catalan) times a polynomial.  Both polynomials come straight from the
table entries: the two-legged one is j! times the reduced recurrence entry,
and the regular one additionally absorbs (nu(nu+1))^j so the Catalan-number
prefactor replaces the raw one.  Golden fixtures pin the polynomials exactly.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Optional

import numpy as np

from .exact import PolyNu, RatFuncNu, c_nu, catalan
from .series import SeriesTable


class FixtureMissing(Exception):
    pass


_KIND_CODE = {"two-legged": "Q", "regular": "S"}


@dataclass(frozen=True)
class CountResult:
    """A count in factored form: prefactor^j times an exact polynomial in nu."""

    kind: str  # "two-legged" (prefactor c_nu) or "regular" (prefactor C_nu)
    g: int
    j: int
    polynomial: PolyNu

    def prefactor(self, nu: int) -> int:
        return c_nu(nu) if self.kind == "two-legged" else catalan(nu)

    def value_at(self, nu: int) -> int:
        """The plain integer count at an integer valence parameter."""
        v = Fraction(self.prefactor(nu)) ** self.j * self.polynomial.eval_at(nu)
        if v.denominator != 1:
            raise AssertionError(
                f"{self.kind} count ({self.g},{self.j}) at nu={nu} "
                f"is not an integer: {v}")
        return v.numerator


def _as_polynomial(coeff: RatFuncNu, what: str) -> PolyNu:
    if coeff.den.degree != 0:
        raise AssertionError(f"{what} did not reduce to a polynomial: {coeff!r}")
    return coeff.num * (1 / coeff.den.coeffs[0])


def two_legged(g: int, j: int, rec: SeriesTable) -> CountResult:
    """Count polynomial for two-legged 2nu-valent maps: j! times the table entry."""
    coeff = rec.coeff(g, j) * math.factorial(j)
    return CountResult("two-legged", g, j,
                       _as_polynomial(coeff, f"two-legged ({g},{j})"))


def regular(g: int, j: int, free: SeriesTable) -> CountResult:
    """Count polynomial for regular 2nu-valent maps, Catalan-normalized."""
    nu_nu1 = PolyNu([0, 1, 1])  # nu(nu+1)
    coeff = free.coeff(g, j) * math.factorial(j) * RatFuncNu(nu_nu1 ** j)
    return CountResult("regular", g, j,
                       _as_polynomial(coeff, f"regular ({g},{j})"))


def count_polynomial(kind: str, g: int, j: int, table: SeriesTable) -> CountResult:
    if kind == "two-legged":
        return two_legged(g, j, table)
    if kind == "regular":
        return regular(g, j, table)
    raise ValueError(f"unknown kind {kind!r}")


# ---------------------------------------------------------------------------
# golden fixtures
# ---------------------------------------------------------------------------

def load_fixture(table_id: str) -> list[dict]:
    """Load a golden fixture by id: 'two-legged' or 'regular'."""
    name = f"golden_{table_id.replace('-', '_')}.json"
    try:
        text = resources.files("mapcount.data").joinpath(name).read_text()
    except FileNotFoundError as exc:
        raise FixtureMissing(name) from exc
    return json.loads(text)["entries"]


def fixture_polynomial(entry: dict) -> PolyNu:
    return PolyNu(entry["num_coeffs"]) * Fraction(1, int(entry["den"]))


@dataclass
class GoldenReport:
    table_id: str
    checked: list[tuple[int, int]]
    mismatches: list[tuple[int, int, str]]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        head = f"golden[{self.table_id}]: {len(self.checked)} entries"
        if self.ok:
            return head + ", all match"
        lines = [head + f", {len(self.mismatches)} MISMATCH"]
        for g, j, detail in self.mismatches:
            lines.append(f"  ({g},{j}): {detail}")
        return "\n".join(lines)


def golden_check(table_id: str, table: SeriesTable,
                 limit: Optional[tuple[int, int]] = None) -> GoldenReport:
    """Structural comparison of computed count polynomials against a fixture.

    `limit` restricts to fixture entries with g <= limit[0] and j <= limit[1];
    the caller must have built the table at least that far.
    """
    entries = load_fixture(table_id)
    code = _KIND_CODE[table_id]
    checked: list[tuple[int, int]] = []
    mismatches: list[tuple[int, int, str]] = []
    for entry in entries:
        if entry["kind"] != code:
            continue
        g, j = entry["g"], entry["j"]
        if limit is not None and (g > limit[0] or j > limit[1]):
            continue
        got = count_polynomial(table_id, g, j, table).polynomial
        want = fixture_polynomial(entry)
        checked.append((g, j))
        if got != want:
            mismatches.append((g, j, f"computed {got!r} != fixture {want!r}"))
    return GoldenReport(table_id, checked, mismatches)


# ---------------------------------------------------------------------------
# numeric root exploration
# ---------------------------------------------------------------------------

def roots_numeric(poly: PolyNu, polish_steps: int = 40) -> list[complex]:
    """All complex roots via the companion matrix, Newton-polished.

    Exploration aid only (root-location statements are conjectural); aims at
    ~1e-10 scaled residuals for the simple-root polynomials it is fed.
    """
    if poly.is_zero():
        raise ValueError("zero polynomial has no root list")
    if poly.degree == 0:
        return []
    desc = [float(c) for c in reversed(poly.coeffs)]
    roots = np.roots(desc)
    dpoly = [float(c * i) for i, c in enumerate(poly.coeffs)][1:]

    def horner(cs_ascending, z):
        acc = 0j
        for c in reversed(cs_ascending):
            acc = acc * z + c
        return acc

    asc = [float(c) for c in poly.coeffs]
    out = []
    for z in roots:
        z = complex(z)
        for _ in range(polish_steps):
            p = horner(asc, z)
            dp = horner(dpoly, z)
            if dp == 0:
                break
            step = p / dp
            z -= step
            if abs(step) < 1e-15 * max(1.0, abs(z)):
                break
        out.append(z)
    out.sort(key=lambda w: (round(w.real, 9), round(w.imag, 9)))
    return out
