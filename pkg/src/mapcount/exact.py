"""Exact arithmetic: rationals, polynomials in the formal valence variable,
and the rational-function field they generate.

Everything downstream (series recursions, coefficient solving, closed-form
evaluation) runs over this field, so all values here are immutable and all
operations are pure.  Rationals are ``fractions.Fraction`` (already canonical:
reduced, positive denominator).  Polynomials are dense coefficient tuples,
lowest degree first; degrees stay small (< ~30) in every in-scope computation,
so no sparse bookkeeping is attempted.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rat = Fraction

Scalar = Union[int, Fraction]


class SingularSystem(Exception):
    """Raised when exact Gaussian elimination finds no usable pivot."""


class NegativeTop(Exception):
    """Raised by binom_int for a negative top argument (never needed in scope)."""


def binom_int(n: int, k: int) -> int:
    """Binomial coefficient with the convention C(n, k) = 0 for k < 0 or k > n.

    The top argument must be nonnegative; generalized binomials are out of scope.
    """
    if n < 0:
        raise NegativeTop(f"binomial top must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def c_nu(nu: int) -> int:
    """Count prefactor 2*nu*C(2nu-1, nu-1): 2, 12, 60, 280, 1260, ... for nu >= 1."""
    return 2 * nu * binom_int(2 * nu - 1, nu - 1)


def catalan(nu: int) -> int:
    """Catalan number C(2nu, nu)/(nu+1): 1, 2, 5, 14, 42, ... for nu >= 1."""
    return binom_int(2 * nu, nu) // (nu + 1)


def pochhammer(a: Scalar, k: int) -> Fraction:
    """Rising factorial a(a+1)...(a+k-1), exactly; equals 1 for k = 0."""
    if k < 0:
        raise ValueError("pochhammer order must be nonnegative")
    out = Fraction(1)
    a = Fraction(a)
    for i in range(k):
        out *= a + i
    return out


def rat_to_str(r: Scalar) -> str:
    """Canonical text form: "p/q", or "p" when the denominator is 1."""
    r = Fraction(r)
    return str(r)


def rat_from_str(s: str) -> Fraction:
    return Fraction(s)


def _as_fraction_tuple(coeffs: Iterable[Scalar]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class PolyNu:
    """Univariate polynomial over Q in the formal variable nu.

    Coefficients are stored lowest degree first; the zero polynomial is the
    empty tuple, and the leading coefficient is nonzero otherwise.  Instances
    are immutable and hashable, so equality is structural.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        object.__setattr__(self, "coeffs", _as_fraction_tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("PolyNu is immutable")

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, PolyNu):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == PolyNu([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("PolyNu", self.coeffs))

    def __repr__(self) -> str:
        if self.is_zero():
            return "PolyNu(0)"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(f"{c}")
            elif i == 1:
                parts.append(f"{c}*nu")
            else:
                parts.append(f"{c}*nu^{i}")
        return "PolyNu(" + " + ".join(parts) + ")"

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> "PolyNu":
        other = _coerce_poly(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PolyNu(out)

    __radd__ = __add__

    def __neg__(self) -> "PolyNu":
        return PolyNu([-c for c in self.coeffs])

    def __sub__(self, other) -> "PolyNu":
        other = _coerce_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "PolyNu":
        other = _coerce_poly(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "PolyNu":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return PolyNu()
            return PolyNu([c * other for c in self.coeffs])
        if not isinstance(other, PolyNu):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return PolyNu()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return PolyNu(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "PolyNu":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = PolyNu([1])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divmod(self, other: "PolyNu") -> tuple["PolyNu", "PolyNu"]:
        """Euclidean division over Q: self = q*other + r with deg r < deg other."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return PolyNu(), self
        quo = [Fraction(0)] * (dq + 1)
        lead = other.coeffs[-1]
        for k in range(dq, -1, -1):
            if len(rem) < len(other.coeffs) + k:
                continue
            c = rem[len(other.coeffs) - 1 + k] / lead
            if c == 0:
                continue
            quo[k] = c
            for i, oc in enumerate(other.coeffs):
                rem[i + k] -= c * oc
        return PolyNu(quo), PolyNu(rem)

    def exact_div(self, other: "PolyNu") -> "PolyNu":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("inexact polynomial division")
        return q

    def eval_at(self, value: Scalar) -> Fraction:
        """Evaluate by Horner's rule at an exact rational point."""
        acc = Fraction(0)
        v = Fraction(value)
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def content(self) -> Fraction:
        """Positive rational c such that self/c has coprime integer coefficients."""
        if self.is_zero():
            return Fraction(1)
        num_gcd = 0
        den_lcm = 1
        for c in self.coeffs:
            num_gcd = math.gcd(num_gcd, abs(c.numerator))
            den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
        return Fraction(num_gcd, den_lcm)

    def primitive(self) -> "PolyNu":
        """Integer-primitive part with positive leading coefficient."""
        if self.is_zero():
            return self
        c = self.content()
        if self.leading() < 0:
            c = -c
        return self * (1 / c)


def _coerce_poly(value) -> PolyNu | None:
    if isinstance(value, PolyNu):
        return value
    if isinstance(value, (int, Fraction)):
        return PolyNu([value])
    return None


POLY_ZERO = PolyNu()
POLY_ONE = PolyNu([1])
NU = PolyNu([0, 1])


def poly_gcd(p: PolyNu, q: PolyNu) -> PolyNu:
    """Greatest common divisor, normalized integer-primitive with positive
    leading coefficient; divides both inputs exactly.
    """
    a, b = p, q
    while not b.is_zero():
        _, r = a.divmod(b)
        a, b = b, r
    if a.is_zero():
        return POLY_ZERO
    return a.primitive()


def poly_from_roots(roots: Sequence[Scalar]) -> PolyNu:
    out = POLY_ONE
    for r in roots:
        out = out * PolyNu([-Fraction(r), 1])
    return out


def poly_to_strs(p: PolyNu) -> list[str]:
    """Coefficient list, lowest degree first, as canonical rational strings."""
    return [rat_to_str(c) for c in p.coeffs]


def poly_from_strs(items: Sequence[str]) -> PolyNu:
    return PolyNu([Fraction(s) for s in items])


class RatFuncNu:
    """Reduced ratio of two PolyNu values: the field Q(nu).

    Canonical form: gcd(num, den) = 1, den is integer-primitive with positive
    leading coefficient (so rational content lives in num), and zero is 0/1.
    This makes equality testing structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=POLY_ONE, _reduced: bool = False):
        num = _coerce_poly(num)
        den = _coerce_poly(den)
        if num is None or den is None:
            raise TypeError("RatFuncNu needs polynomial or scalar arguments")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in RatFuncNu")
        if not _reduced:
            if num.is_zero():
                den = POLY_ONE
            else:
                g = poly_gcd(num, den)
                if g.degree > 0 or g.leading() != 1:
                    num = num.exact_div(g)
                    den = den.exact_div(g)
                c = den.content()
                if den.leading() < 0:
                    c = -c
                if c != 1:
                    num = num * (1 / c)
                    den = den * (1 / c)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFuncNu is immutable")

    # -- structure -----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree <= 0

    def as_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"not a constant: {self!r}")
        if self.num.is_zero():
            return Fraction(0)
        return self.num.coeffs[0] / self.den.coeffs[0]

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        other = _coerce_ratfunc(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash(("RatFuncNu", self.num.coeffs, self.den.coeffs))

    def __repr__(self) -> str:
        if self.den == POLY_ONE:
            return f"RatFuncNu({self.num!r})"
        return f"RatFuncNu({self.num!r} / {self.den!r})"

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other) -> "RatFuncNu":
        other = _coerce_ratfunc(other)
        if other is None:
            return NotImplemented
        return RatFuncNu(self.num * other.den + other.num * self.den,
                         self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFuncNu":
        return RatFuncNu(-self.num, self.den, _reduced=True)

    def __sub__(self, other) -> "RatFuncNu":
        other = _coerce_ratfunc(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RatFuncNu":
        other = _coerce_ratfunc(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "RatFuncNu":
        other = _coerce_ratfunc(other)
        if other is None:
            return NotImplemented
        # cross-reduce first to keep intermediate degrees down
        a = RatFuncNu(self.num, other.den)
        b = RatFuncNu(other.num, self.den)
        return RatFuncNu(a.num * b.num, a.den * b.den, _reduced=True)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFuncNu":
        other = _coerce_ratfunc(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "RatFuncNu":
        other = _coerce_ratfunc(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def inverse(self) -> "RatFuncNu":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFuncNu(self.den, self.num)

    def eval_at(self, value: Scalar) -> Fraction:
        d = self.den.eval_at(value)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at nu={value}")
        return self.num.eval_at(value) / d

    def total_degree(self) -> int:
        """Pivot-selection weight: deg num + deg den (zero counts as 0)."""
        return max(self.num.degree, 0) + max(self.den.degree, 0)


def _coerce_ratfunc(value) -> RatFuncNu | None:
    if isinstance(value, RatFuncNu):
        return value
    if isinstance(value, (int, Fraction, PolyNu)):
        return RatFuncNu(value)
    return None


RF_ZERO = RatFuncNu(0)
RF_ONE = RatFuncNu(1)


def linsolve(matrix: Sequence[Sequence[RatFuncNu]],
             rhs: Sequence[RatFuncNu]) -> list[RatFuncNu]:
    """Solve a square system over Q(nu) by Gaussian elimination.

    Pivots are chosen over the whole remaining submatrix by lowest
    num*den degree, which limits intermediate degree blow-up (the dominant
    cost over Q(nu)).  Raises SingularSystem when some column offers no pivot.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix) or len(rhs) != n:
        raise ValueError("linsolve needs a square matrix matching rhs")
    a = [[_must_rf(x) for x in row] for row in matrix]
    b = [_must_rf(x) for x in rhs]
    col_of = list(range(n))  # col_of[k] = original column eliminated at step k

    for step in range(n):
        best = None
        for i in range(step, n):
            for j in range(step, n):
                if a[i][j].is_zero():
                    continue
                w = a[i][j].total_degree()
                if best is None or w < best[0]:
                    best = (w, i, j)
        if best is None:
            raise SingularSystem("no pivot available; determinant is identically zero")
        _, pi, pj = best
        if pi != step:
            a[pi], a[step] = a[step], a[pi]
            b[pi], b[step] = b[step], b[pi]
        if pj != step:
            for row in a:
                row[pj], row[step] = row[step], row[pj]
            col_of[pj], col_of[step] = col_of[step], col_of[pj]
        piv = a[step][step]
        for i in range(step + 1, n):
            if a[i][step].is_zero():
                continue
            f = a[i][step] / piv
            a[i][step] = RF_ZERO
            for j in range(step + 1, n):
                if not a[step][j].is_zero():
                    a[i][j] = a[i][j] - f * a[step][j]
            b[i] = b[i] - f * b[step]

    x = [RF_ZERO] * n
    for i in range(n - 1, -1, -1):
        acc = b[i]
        for j in range(i + 1, n):
            if not a[i][j].is_zero():
                acc = acc - a[i][j] * x[j]
        x[i] = acc / a[i][i]

    out = [RF_ZERO] * n
    for k in range(n):
        out[col_of[k]] = x[k]
    return out


def _must_rf(x) -> RatFuncNu:
    r = _coerce_ratfunc(x)
    if r is None:
        raise TypeError(f"expected RatFuncNu-compatible value, got {type(x)}")
    return r
