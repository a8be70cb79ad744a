"""Exact evaluation of the terminating hypergeometric closed forms.

All sums here terminate (some upper parameter is a nonpositive integer), so
every value is an exact rational;  evaluation never touches floating point.
Covers the sphere/torus formulas, the general-genus linear combinations of
2F1 values driven by a coefficient table, the quartic (4-valent) closed
forms, and the hexic (6-valent) fixed-valence results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence, Union

from .exact import RatFuncNu, Rat, binom_int, c_nu, pochhammer

Scalar = Union[int, Fraction]


class ZeroLowerPochhammer(Exception):
    """A lower-parameter Pochhammer vanished before the series terminated."""

    def __init__(self, k: int):
        super().__init__(f"lower Pochhammer factor vanishes at term k={k}")
        self.k = k


class NonTerminating(Exception):
    """No upper parameter is a nonpositive integer, so the sum does not stop."""


@dataclass(frozen=True)
class PFQSpec:
    """A terminating pFq evaluation request, all parameters exact."""

    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]
    z: Fraction

    @staticmethod
    def of(upper: Sequence[Scalar], lower: Sequence[Scalar], z: Scalar) -> "PFQSpec":
        return PFQSpec(tuple(Fraction(a) for a in upper),
                       tuple(Fraction(c) for c in lower),
                       Fraction(z))


def _termination_index(upper: Sequence[Fraction]) -> int:
    stops = [-int(a) for a in upper if a <= 0 and a.denominator == 1]
    if not stops:
        raise NonTerminating(f"no nonpositive-integer upper parameter in {upper}")
    return min(stops)


def pfq(spec: PFQSpec) -> Fraction:
    """Exact finite sum over k of prod(upper)_k / (prod(lower)_k k!) * z^k."""
    m = _termination_index(spec.upper)
    total = Fraction(1)
    term = Fraction(1)
    for k in range(m):
        for c in spec.lower:
            if c + k == 0:
                raise ZeroLowerPochhammer(k + 1)
        num = Fraction(1)
        for a in spec.upper:
            num *= a + k
        den = Fraction(k + 1)
        for c in spec.lower:
            den *= c + k
        term = term * num / den * spec.z
        total += term
    return total


def hyp2f1(a: Scalar, b: Scalar, c: Scalar, z: Scalar) -> Fraction:
    return pfq(PFQSpec.of([a, b], [c], z))


def hyp3f2(a1: Scalar, a2: Scalar, a3: Scalar, b1: Scalar, b2: Scalar,
           z: Scalar) -> Fraction:
    return pfq(PFQSpec.of([a1, a2, a3], [b1, b2], z))


def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise AssertionError(f"{what} is not an integer: {x}")
    return x.numerator


# ---------------------------------------------------------------------------
# sphere and torus
# ---------------------------------------------------------------------------

def count_sphere(nu: int, j: int) -> int:
    """Planar count: c_nu^j (nu j - 1)! / ((nu-1) j + 2)!."""
    if nu < 1 or j < 1:
        raise ValueError("count_sphere needs nu >= 1, j >= 1")
    val = Fraction(c_nu(nu) ** j) * math.factorial(nu * j - 1)
    val /= math.factorial((nu - 1) * j + 2)
    return _as_int(val, f"sphere count nu={nu} j={j}")


def count_torus(nu: int, j: int) -> int:
    """Genus-1 count from the pair of terminating 3F2 sums at argument 1-nu."""
    if nu < 2 or j < 1:
        raise ValueError("count_torus needs nu >= 2, j >= 1")
    z = Fraction(1 - nu)
    t1 = t2 = Fraction(0)
    b1 = binom_int(nu * j - 1, j - 1)
    if b1:  # at j=1 the partner binomial vanishes and its sum is skipped whole
        t1 = Fraction(nu - 1) * b1 * hyp3f2(1, 1, 1 - j, 2, (nu - 1) * j + 1, z)
    b2 = binom_int(nu * j - 1, j - 2)
    if b2:
        t2 = Fraction(nu - 1) ** 2 * b2 * hyp3f2(1, 1, 2 - j, 2, (nu - 1) * j + 2, z)
    val = Fraction(math.factorial(j) * c_nu(nu) ** j, 12) * (t1 - t2)
    return _as_int(val, f"torus count nu={nu} j={j}")


# ---------------------------------------------------------------------------
# general genus via a coefficient table
# ---------------------------------------------------------------------------

def _coeff_entries(coeffs) -> Mapping[int, RatFuncNu]:
    return getattr(coeffs, "entries", coeffs)


def count_general(kind: str, g: int, nu: int, j: int, coeffs) -> int:
    """Genus-g count as j! c_nu^j (nu-1)^j times a 2F1 combination.

    kind "two-legged" uses the 3g coefficients a_l (g >= 1); kind "regular"
    uses the 3g-2 coefficients b_l (g >= 2).  `coeffs` is a CoeffTable or a
    plain {l: RatFuncNu} mapping.
    """
    if nu < 2:
        raise ValueError("hypergeometric counts need nu >= 2")
    if j < 1:
        raise ValueError("need j >= 1")
    entries = _coeff_entries(coeffs)
    z = Fraction(1, 1 - nu)
    total = Fraction(0)
    if kind == "two-legged":
        if g < 1:
            raise ValueError("two-legged closed form needs g >= 1")
        n_terms = 3 * g
        for el in range(n_terms):
            # first vanishing index of the lower Pochhammer sits past termination
            assert 2 * g + el + j - 1 > j
            d = binom_int(2 * (g + 1) + el + j - 4, j)
            f = hyp2f1(-j, -nu * j, 2 - 2 * g - (el + j), z)
            total += entries[el].eval_at(nu) * d * f
    elif kind == "regular":
        if g < 2:
            raise ValueError("regular closed form needs g >= 2")
        n_terms = 3 * g - 2
        for el in range(n_terms):
            assert 2 * g + el + j - 3 > j
            d = binom_int(2 * g + el + j - 4, j)
            f = hyp2f1(-j, 1 - nu * j, 4 - 2 * g - (el + j), z)
            total += entries[el].eval_at(nu) * d * f
    else:
        raise ValueError(f"unknown kind {kind!r}")
    val = math.factorial(j) * Fraction(c_nu(nu)) ** j * Fraction(nu - 1) ** j * total
    return _as_int(val, f"{kind} count g={g} nu={nu} j={j}")


# ---------------------------------------------------------------------------
# quartic (4-valent) closed forms
# ---------------------------------------------------------------------------

def quartic_closed(g: int, j: int) -> int:
    """Number of regular 4-valent maps of genus g with j vertices, g <= 3."""
    if j < 1:
        raise ValueError("need j >= 1")
    if g == 0:
        val = Fraction(12 ** j * math.factorial(2 * j - 1), math.factorial(j + 2))
    elif g == 1:
        val = Fraction(12 ** j * (4 ** j * math.factorial(j) ** 2
                                  - math.factorial(2 * j)),
                       24 * j * math.factorial(j))
    elif g == 2:
        # closed form indexed from the second vertex count; the one-vertex
        # count vanishes because every such map fits on the sphere or torus
        if j == 1:
            return 0
        i = j - 1
        val = Fraction(12 ** i * math.factorial(2 * i + 2) * (28 * i + 37),
                       360 * (i + 1) * math.factorial(i - 1)) \
            - Fraction(13 * i * (i + 1) * math.factorial(i) * 48 ** (i - 1))
    elif g == 3:
        # indexed from the fifth vertex count; j = 1..4 all vanish
        if j <= 4:
            return 0
        i = j - 4
        inner = (Fraction(2741, 10) * math.factorial(i + 5)
                 - Fraction(291, 10) * i * math.factorial(i + 4)
                 - Fraction(2741 * math.factorial(2 * i + 9),
                            1260 * 4 ** i * math.factorial(i + 4))
                 - Fraction(292 * i * math.factorial(2 * i + 7),
                            315 * 4 ** i * math.factorial(i + 3)))
        val = Fraction(16 * 48 ** i * math.factorial(i + 3),
                       3 * math.factorial(i)) * inner
    else:
        raise ValueError("quartic closed forms cover g in {0,1,2,3}")
    return _as_int(val, f"quartic count g={g} j={j}")


# ---------------------------------------------------------------------------
# hexic (6-valent) closed forms
# ---------------------------------------------------------------------------

_HEXIC_REGULAR_G2_SMALL = {1: 0, 2: 4770, 3: 17290800,
                           4: 54015984 * 10 ** 3, 5: 174855024 * 10 ** 6}
_HEXIC_LEGGED_G2_SMALL = {1: 0, 2: 21240, 3: 355492800, 4: 2543591808 * 10 ** 3}

# weight, binomial offset t, so a term reads w * C(3j, j-t) * 2F1(8, t-j; t+1+2j; -2)
_HEXIC_G2_LEGGED_TERMS = ((59, 2), (4011, 3), (27528, 4), (34268, 5))
_HEXIC_G2_REGULAR_TERMS = ((371, 2), (6735, 3), (23496, 4), (25004, 5), (7872, 6))


def _hexic_g2_bracket(terms, j: int) -> Fraction:
    total = Fraction(0)
    for w, t in terms:
        b = binom_int(3 * j, j - t)
        if b == 0:
            continue
        total += w * b * hyp2f1(8, t - j, t + 1 + 2 * j, -2)
    return total


def hexic_series(kind: str, g: int, j: int) -> tuple[Fraction, int]:
    """Taylor coefficient of the hexic expansion data, with its x-power.

    kind "two-legged" returns the recurrence-coefficient entry at (g, j);
    kind "regular" returns the free-energy entry.  Zero entries are returned
    as (0, nominal power).
    """
    if j < 0 or g < 0:
        raise ValueError("need g, j >= 0")
    if kind == "two-legged":
        power = 2 * j + 1 - 2 * g
        if j == 0:
            return (Fraction(1) if g == 0 else Fraction(0)), power
        if g == 0:
            c = Fraction((-10) ** j * math.factorial(3 * j),
                         math.factorial(j) * math.factorial(2 * j + 1))
            return c, power
        if g == 1:
            if j == 1:
                return Fraction(-5), power
            bracket = 10 * binom_int(3 * j, j - 2) * hyp2f1(3, 2 - j, 3 + 2 * j, -2) \
                + binom_int(3 * j, j - 1) * hyp2f1(3, 1 - j, 2 + 2 * j, -2)
            return Fraction((-10) ** j, 2) * bracket, power
        if g == 2:
            small = {1: Fraction(0), 2: Fraction(295), 3: Fraction(-274300),
                     4: Fraction(81777000)}
            if j in small:
                return small[j], power
            bracket = _hexic_g2_bracket(_HEXIC_G2_LEGGED_TERMS, j)
            return Fraction((-10) ** j, 20) * bracket, power
        raise ValueError("hexic two-legged series covers g in {0,1,2}")
    if kind == "regular":
        power = 2 * j - 2 * g
        if j == 0:
            return Fraction(0), power
        if g == 0:
            c = Fraction((-10) ** j) * Fraction(
                binom_int(3 * j + 1, j) - 2 * binom_int(3 * j + 1, j - 1),
                6 * j * (3 * j + 1))
            return c, power
        if g == 1:
            c = Fraction((-10) ** j) * Fraction(2 * binom_int(3 * j + 2, j - 1),
                                                3 * j * (3 * j + 1)) \
                * hyp2f1(3, 1 - j, 4 + 2 * j, -2)
            return c, power
        if g == 2:
            small = {1: Fraction(0), 2: Fraction(265, 4), 3: Fraction(-40025, 3),
                     4: Fraction(1736625), 5: Fraction(-187387500)}
            if j in small:
                return small[j], power
            bracket = _hexic_g2_bracket(_HEXIC_G2_REGULAR_TERMS, j)
            return Fraction((-10) ** j, 40 * j * (3 * j + 1)) * bracket, power
        raise ValueError("hexic regular series covers g in {0,1,2}")
    raise ValueError(f"unknown kind {kind!r}")


def hexic_closed(kind: str, g: int, j: int) -> int:
    """Number of hexic maps of genus g <= 2 with j vertices, exactly."""
    if j < 1:
        raise ValueError("need j >= 1")
    if kind == "two-legged" and g == 2 and j in _HEXIC_LEGGED_G2_SMALL:
        return _HEXIC_LEGGED_G2_SMALL[j]
    if kind == "regular" and g == 2 and j in _HEXIC_REGULAR_G2_SMALL:
        return _HEXIC_REGULAR_G2_SMALL[j]
    coeff, _ = hexic_series(kind, g, j)
    val = Fraction((-6) ** j * math.factorial(j)) * coeff
    return _as_int(val, f"hexic {kind} count g={g} j={j}")
