"""Fixed-valence cross-validation engine.

For an integer valence parameter nu the string identity of the lattice reads
R_n + u * F_nu = x, where F_nu is a sum of C(2nu-1, nu) products of nu shifted
recurrence coefficients.  This module generates F_nu combinatorially (by walk
enumeration on the Jacobi operator), then re-derives the whole
recurrence-coefficient Taylor table order by order from that single identity.
It shares no code path with the symbolic-nu engine, which is the point: the
two tables must agree entry for entry.

Coefficients here are plain rationals in the literal normalization (no
implicit binomial factor), attached to the known x-power j(nu-1)+1-2g.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .exact import binom_int
from .series import SeriesTable


class PairingFailure(Exception):
    """A walk produced an odd number of some ladder index (construction bug)."""


class GenusBoundViolation(Exception):
    """A nonzero coefficient appeared below the admissible genus bound."""


class NoConvergence(Exception):
    pass


@dataclass(frozen=True)
class FreudTerm:
    """One product of nu shifted recurrence coefficients, as a shift multiset."""

    shifts: tuple[int, ...]  # sorted, length nu, each |s| <= nu-1

    def __str__(self) -> str:
        return "{" + ",".join(str(s) for s in self.shifts) + "}"


@dataclass(frozen=True)
class FreudFunction:
    nu: int
    terms: tuple[FreudTerm, ...]  # duplicates encode multiplicity

    def term_multiplicities(self) -> Counter:
        return Counter(t.shifts for t in self.terms)


def gen_freud(nu: int) -> FreudFunction:
    """Build F_nu by enumerating +-1 walks of length 2nu-1 from level 0 to -1.

    An up-step from level i contributes ladder index i+1, a down-step from
    level i contributes index i; one extra index 0 is prepended for the
    leading ladder entry.  The 2nu collected indices must pair up exactly,
    each pair becoming one shifted recurrence coefficient.
    """
    if nu < 1:
        raise ValueError("need nu >= 1")
    terms = []
    for steps in itertools.product((1, -1), repeat=2 * nu - 1):
        if sum(steps) != -1:
            continue
        level = 0
        indices = [0]
        for st in steps:
            indices.append(level + 1 if st == 1 else level)
            level += st
        counts = Counter(indices)
        shifts = []
        for idx, cnt in counts.items():
            if cnt % 2:
                raise PairingFailure(
                    f"index {idx} appears {cnt} times in walk {steps}")
            shifts.extend([idx] * (cnt // 2))
        shifts.sort()
        if len(shifts) != nu or any(abs(s) > nu - 1 for s in shifts):
            raise PairingFailure(f"bad term {shifts} from walk {steps}")
        terms.append(FreudTerm(tuple(shifts)))
    fn = FreudFunction(nu, tuple(sorted(terms, key=lambda t: t.shifts)))
    expected = binom_int(2 * nu - 1, nu)
    if len(fn.terms) != expected:
        raise PairingFailure(
            f"F_{nu} has {len(fn.terms)} terms, expected {expected}")
    return fn


class FixedRecTable:
    """Recurrence Taylor table at one integer nu: (g, j) -> Fraction.

    The entry is the coefficient of x^(j(nu-1)+1-2g); absent means zero.
    """

    def __init__(self, nu: int):
        self.nu = nu
        self.entries: dict[tuple[int, int], Fraction] = {}

    def x_power(self, g: int, j: int) -> int:
        return j * (self.nu - 1) + 1 - 2 * g

    def get(self, g: int, j: int) -> Fraction:
        return self.entries.get((g, j), Fraction(0))

    def set(self, g: int, j: int, value: Fraction) -> None:
        if value:
            self.entries[(g, j)] = value


def _factor_panel(table: FixedRecTable, shift: int, k_max: int,
                  j_max: int) -> list[list[Fraction]]:
    """Coefficient panel of one shifted recurrence factor.

    panel[k][j] is the (N^-k, u^j) coefficient of the factor expanded about
    the running lattice position; each inverse power of N beyond the genus
    grading is one x-derivative, weighted by shift^l / l!.  The implicit
    x-power of panel[k][j] is j(nu-1)+1-k.
    """
    nu = table.nu
    panel = [[Fraction(0)] * (j_max + 1) for _ in range(k_max + 1)]
    for (g, j), c in table.entries.items():
        if j > j_max or 2 * g > k_max:
            continue
        d = table.x_power(g, j)
        ff = Fraction(1)  # falling factorial of the x-power
        for el in range(k_max - 2 * g + 1):
            k = 2 * g + el
            if el > 0:
                ff *= d - (el - 1)
                if ff == 0:
                    break
            panel[k][j] += c * shift ** el * ff / math.factorial(el)
    return panel


def _convolve(a: list[list[Fraction]], b: list[list[Fraction]],
              k_max: int, j_max: int) -> list[list[Fraction]]:
    out = [[Fraction(0)] * (j_max + 1) for _ in range(k_max + 1)]
    for k1, row in enumerate(a):
        for j1, v in enumerate(row):
            if not v:
                continue
            for k2 in range(k_max - k1 + 1):
                brow = b[k2]
                for j2 in range(j_max - j1 + 1):
                    w = brow[j2]
                    if w:
                        out[k1 + k2][j1 + j2] += v * w
    return out


def freud_recursion(nu: int, G_max: int, J_max: int) -> FixedRecTable:
    """Recurrence table from the string identity alone, for one integer nu.

    The u^J, N^-2G coefficient of x - u*F_nu is read off directly: the u in
    front of F_nu means only already-computed rows (u-power below J) enter,
    so no division is ever needed.
    """
    if nu < 2:
        raise ValueError("need nu >= 2")
    fn = gen_freud(nu)
    mult = fn.term_multiplicities()
    table = FixedRecTable(nu)
    table.set(0, 0, Fraction(1))  # the bare 't Hooft parameter
    k_max = 2 * G_max
    for J in range(1, J_max + 1):
        j_in = J - 1
        panels = {s: _factor_panel(table, s, k_max, j_in)
                  for s in range(-nu + 1, nu)}
        total = [Fraction(0)] * (k_max + 1)
        for shifts, m in mult.items():
            prod = panels[shifts[0]]
            for s in shifts[1:]:
                prod = _convolve(prod, panels[s], k_max, j_in)
            for k in range(0, k_max + 1, 2):
                total[k] += m * prod[k][j_in]
        for G in range(G_max + 1):
            c = -total[2 * G]
            if c:
                if table.x_power(G, J) < 0:
                    raise GenusBoundViolation(
                        f"nonzero entry at (g={G}, j={J}) with negative "
                        f"x-power {table.x_power(G, J)} at nu={nu}")
                table.set(G, J, c)
    return table


def specialize_series(rec: SeriesTable, nu: int, G_max: int,
                      J_max: int) -> FixedRecTable:
    """Evaluate a symbolic recurrence table at integer nu, in the literal
    normalization (the implicit (-C(2nu-1,nu))^j factor is reinstated here).
    """
    kappa = -binom_int(2 * nu - 1, nu)
    out = FixedRecTable(nu)
    for g, j, entry in rec.cells():
        if g > G_max or j > J_max:
            continue
        out.set(g, j, entry.coeff.eval_at(nu) * Fraction(kappa) ** j)
    return out


def r0_numeric(nu: int, x: float, u: float) -> float:
    """Real branch of r + C(2nu-1,nu) u r^nu = x with r -> x as u -> 0.

    Safeguarded Newton from r = x; the left side is strictly increasing on
    r > 0, so the root is unique and bracketed by [0, x].
    """
    if u < 0 or x <= 0:
        raise ValueError("need u >= 0 and x > 0")
    kap = float(binom_int(2 * nu - 1, nu))
    lo, hi = 0.0, x
    r = x
    for _ in range(200):
        f = r + kap * u * r ** nu - x
        if f > 0:
            hi = r
        else:
            lo = r
        if abs(f) <= 1e-13 * max(abs(x), abs(r)):
            return r
        df = 1.0 + kap * u * nu * r ** (nu - 1)
        step = f / df
        r2 = r - step
        if not (lo < r2 < hi):
            r2 = 0.5 * (lo + hi)
        r = r2
    raise NoConvergence(f"r0 iteration stalled at nu={nu}, x={x}, u={u}")
