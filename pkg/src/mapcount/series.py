"""Symbolic-nu Taylor tables for the recurrence-coefficient and free-energy
expansions of the even-valent one-coupling matrix model.

The genus-g, u^j entry of either expansion is a monomial in the 't Hooft
parameter x whose coefficient is, up to a power of the valence binomial
K = C(2nu-1, nu), a rational function of nu.  Tables here store the reduced
coefficient: the true series coefficient is  coeff * (-K)^j * x^(a*nu+b).
Since the u-grade j is additive under every product appearing in the lattice
recursions, the factor (-K)^j never needs to be carried explicitly; this
keeps the working field at Q(nu).

Rows are built recursively: genus 0 comes from the closed planar formula, and
each higher-genus entry is the unique monomial solution of a first-order
x-ODE whose inhomogeneity collects lower rows of the lattice hierarchy.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .exact import (
    PolyNu,
    RatFuncNu,
    RF_ZERO,
    poly_from_strs,
    poly_to_strs,
    rat_to_str,
)


class InconsistentExponent(Exception):
    """A nonzero contribution carried the wrong x-exponent.

    Every product feeding a (g, j) entry must land on the single admissible
    monomial; anything else indicates a bookkeeping bug and is fatal.
    """


class ZeroDivisor(Exception):
    """Division by the vanishing recursion divisor (only possible at g=0, j=1)."""


@dataclass(frozen=True)
class AffineExp:
    """x-exponent of the form a*nu + b."""

    a: int
    b: int

    def __add__(self, other: "AffineExp") -> "AffineExp":
        return AffineExp(self.a + other.a, self.b + other.b)

    def shift(self, db: int) -> "AffineExp":
        return AffineExp(self.a, self.b + db)

    def as_poly(self) -> PolyNu:
        return PolyNu([self.b, self.a])

    def eval_at(self, nu: int) -> int:
        return self.a * nu + self.b


@dataclass(frozen=True)
class SeriesCoeff:
    """One normalized Taylor-table entry: reduced coefficient plus x-exponent."""

    coeff: RatFuncNu
    xexp: AffineExp


def rec_exponent(g: int, j: int) -> AffineExp:
    """Exponent j(nu-1)+1-2g of a recurrence-table entry."""
    return AffineExp(j, 1 - j - 2 * g)


def free_exponent(g: int, j: int) -> AffineExp:
    """Exponent j(nu-1)-2g of a free-energy-table entry."""
    return AffineExp(j, -j - 2 * g)


class SeriesTable:
    """Map (g, j) -> SeriesCoeff with absent entries meaning identically zero."""

    def __init__(self, kind: str):
        if kind not in ("rec", "free"):
            raise ValueError("kind must be 'rec' or 'free'")
        self.kind = kind
        self._entries: dict[tuple[int, int], SeriesCoeff] = {}

    def expected_exponent(self, g: int, j: int) -> AffineExp:
        return rec_exponent(g, j) if self.kind == "rec" else free_exponent(g, j)

    def get(self, g: int, j: int) -> Optional[SeriesCoeff]:
        return self._entries.get((g, j))

    def coeff(self, g: int, j: int) -> RatFuncNu:
        e = self._entries.get((g, j))
        return e.coeff if e is not None else RF_ZERO

    def set(self, g: int, j: int, entry: SeriesCoeff) -> None:
        if entry.coeff.is_zero():
            self._entries.pop((g, j), None)
            return
        if entry.xexp != self.expected_exponent(g, j):
            raise InconsistentExponent(
                f"({g},{j}) entry has exponent {entry.xexp}, "
                f"expected {self.expected_exponent(g, j)}")
        self._entries[(g, j)] = entry

    def cells(self) -> Iterator[tuple[int, int, SeriesCoeff]]:
        for (g, j), entry in sorted(self._entries.items()):
            yield g, j, entry

    def __len__(self) -> int:
        return len(self._entries)


def base_r0(j: int) -> SeriesCoeff:
    """Planar-row entry: (1/j!) prod_{i=0}^{j-2} (j(nu-1)+2+i), exponent j*nu+1-j.

    For j = 0 this is the bare 't Hooft parameter itself (coefficient 1, x^1).
    """
    if j < 0:
        raise ValueError("need j >= 0")
    if j == 0:
        return SeriesCoeff(RatFuncNu(1), AffineExp(0, 1))
    prod = PolyNu([1])
    for i in range(j - 1):
        prod = prod * PolyNu([2 + i - j, j])
    coeff = RatFuncNu(prod * Fraction(1, math.factorial(j)))
    return SeriesCoeff(coeff, rec_exponent(0, j))


def deriv_x(t: SeriesCoeff) -> SeriesCoeff:
    """d/dx of a monomial entry: multiply by the exponent, lower it by one."""
    return SeriesCoeff(t.coeff * t.xexp.as_poly(), t.xexp.shift(-1))


class _DerivCache:
    """Derivatives of table entries, memoized per (g, j, order)."""

    def __init__(self, table: SeriesTable):
        self.table = table
        self._cache: dict[tuple[int, int, int], Optional[SeriesCoeff]] = {}

    def get(self, g: int, j: int, order: int) -> Optional[SeriesCoeff]:
        key = (g, j, order)
        if key in self._cache:
            return self._cache[key]
        if order == 0:
            out = self.table.get(g, j)
        else:
            prev = self.get(g, j, order - 1)
            if prev is None:
                out = None
            else:
                d = deriv_x(prev)
                out = None if d.coeff.is_zero() else d
        self._cache[key] = out
        return out


def volterra_rhs(G: int, J: int, table: SeriesTable,
                 _dcache: Optional[_DerivCache] = None) -> SeriesCoeff:
    """Inhomogeneous side of the recurrence-row ODE at (G, J).

    Expands the product of the recurrence coefficient with its first
    symmetric difference through odd-order derivative shifts, collects the
    (N^-2G, u^J) coefficient, and leaves out the two contributions linear in
    the target entry (those are absorbed into the solver's divisor).
    """
    if G < 1:
        raise ValueError("the recursion starts at genus 1; genus 0 is closed-form")
    target = rec_exponent(G, J)
    dcache = _dcache or _DerivCache(table)
    acc = RF_ZERO
    for g in range(G + 1):
        for h in range(G - g + 1):
            el = G - g - h
            order = 2 * el + 1
            w = Fraction(1, math.factorial(order))
            for j1 in range(J + 1):
                j2 = J - j1
                if g == G and el == 0 and j1 == J:
                    continue  # target times d/dx of the planar x
                if h == G and el == 0 and j2 == J:
                    continue  # planar x times d/dx of the target
                t1 = table.get(g, j1)
                if t1 is None:
                    continue
                d2 = dcache.get(h, j2, order)
                if d2 is None:
                    continue
                coeff = t1.coeff * d2.coeff * w
                if coeff.is_zero():
                    continue
                exp = t1.xexp + d2.xexp
                if exp != target:
                    raise InconsistentExponent(
                        f"volterra ({G},{J}): triple (g={g},h={h},l={el}) "
                        f"u-split ({j1},{j2}) gives {exp}, expected {target}")
                acc = acc + coeff
    return SeriesCoeff(acc, target)


def solve_beta(G: int, J: int, table: SeriesTable,
               _dcache: Optional[_DerivCache] = None) -> SeriesCoeff:
    """Recurrence-table entry at (G, J >= 1): the collected inhomogeneity
    divided by J + 2G - 1 (the image of the row ODE on the admissible monomial).
    """
    divisor = J + 2 * G - 1
    if divisor == 0:
        raise ZeroDivisor("divisor vanishes only at (g, j) = (0, 1)")
    rhs = volterra_rhs(G, J, table, _dcache)
    return SeriesCoeff(rhs.coeff * Fraction(1, divisor), rhs.xexp)


def solve_alpha(G: int, J: int, rec: SeriesTable,
                _dcache: Optional[_DerivCache] = None) -> SeriesCoeff:
    """Free-energy entry at (G, J >= 1) from the completed recurrence table.

    Collects the (N^-2G, u^J) coefficient of the symmetric product (the
    recurrence coefficient times its even-shift average) over 4x^2, then
    divides by nu*J*(nu*J + 1), the action of the u-Euler operator on u^J.
    """
    if J < 1:
        raise ValueError("free-energy rows start at u^1; the u^0 column is zero")
    target = free_exponent(G, J)
    dcache = _dcache or _DerivCache(rec)
    acc = RF_ZERO
    for g in range(G + 1):
        for h in range(G - g + 1):
            m = G - g - h
            order = 2 * m
            w = Fraction(2, math.factorial(order))
            for j1 in range(J + 1):
                j2 = J - j1
                t1 = rec.get(g, j1)
                if t1 is None:
                    continue
                d2 = dcache.get(h, j2, order)
                if d2 is None:
                    continue
                coeff = t1.coeff * d2.coeff * w
                if coeff.is_zero():
                    continue
                exp = (t1.xexp + d2.xexp).shift(-2)  # the 1/x^2 factor
                if exp != target:
                    raise InconsistentExponent(
                        f"free energy ({G},{J}): triple (g={g},h={h},m={m}) "
                        f"u-split ({j1},{j2}) gives {exp}, expected {target}")
                acc = acc + coeff
    euler = PolyNu([0, J]) * PolyNu([1, J])  # nu*J*(nu*J + 1)
    coeff = acc * Fraction(1, 4) / RatFuncNu(euler)
    return SeriesCoeff(coeff, target)


def build_tables(G_max: int, J_max: int) -> tuple[SeriesTable, SeriesTable]:
    """Complete tables for g <= G_max, j <= J_max, built genus by genus."""
    if G_max < 0 or J_max < 0:
        raise ValueError("need G_max, J_max >= 0")
    rec = SeriesTable("rec")
    for j in range(J_max + 1):
        rec.set(0, j, base_r0(j))
    dcache = _DerivCache(rec)
    for G in range(1, G_max + 1):
        for J in range(1, J_max + 1):
            rec.set(G, J, solve_beta(G, J, rec, dcache))
    free = SeriesTable("free")
    for G in range(G_max + 1):
        for J in range(1, J_max + 1):
            free.set(G, J, solve_alpha(G, J, rec, dcache))
    return rec, free


# ---------------------------------------------------------------------------
# dump format
# ---------------------------------------------------------------------------

def table_rows(table: SeriesTable) -> list[dict]:
    """JSON rows {g, j, coeff_num, coeff_den, exp_a, exp_b}.

    coeff_den is a single rational string when the denominator is constant
    (always the case for recurrence entries); free-energy entries may carry a
    polynomial denominator, emitted as a coefficient list.
    """
    rows = []
    for g, j, entry in table.cells():
        den = entry.coeff.den
        row = {
            "g": g,
            "j": j,
            "coeff_num": poly_to_strs(entry.coeff.num),
            "coeff_den": rat_to_str(den.coeffs[0]) if den.degree == 0
            else poly_to_strs(den),
            "exp_a": entry.xexp.a,
            "exp_b": entry.xexp.b,
        }
        rows.append(row)
    return rows


def table_from_rows(kind: str, rows: list[dict]) -> SeriesTable:
    table = SeriesTable(kind)
    for row in rows:
        num = poly_from_strs(row["coeff_num"])
        den_raw = row["coeff_den"]
        den = poly_from_strs(den_raw) if isinstance(den_raw, list) \
            else PolyNu([Fraction(den_raw)])
        entry = SeriesCoeff(RatFuncNu(num, den),
                            AffineExp(row["exp_a"], row["exp_b"]))
        table.set(row["g"], row["j"], entry)
    return table


def dump_table(table: SeriesTable, fp) -> None:
    json.dump({"kind": table.kind, "rows": table_rows(table)}, fp, indent=1)
