from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mapcount.exact import (
    NU,
    POLY_ONE,
    POLY_ZERO,
    NegativeTop,
    PolyNu,
    RatFuncNu,
    SingularSystem,
    binom_int,
    linsolve,
    pochhammer,
    poly_from_roots,
    poly_from_strs,
    poly_gcd,
    poly_to_strs,
    rat_to_str,
)


def test_binom_conventions():
    assert binom_int(5, -1) == 0
    assert binom_int(0, 0) == 1
    assert binom_int(5, 7) == 0
    # the coefficient in front of the cubic term of the hexic level-zero identity
    assert binom_int(2 * 3 - 1, 3) == 10
    with pytest.raises(NegativeTop):
        binom_int(-1, 0)


def test_pochhammer_values():
    assert pochhammer(-3, 4) == 0
    assert pochhammer(1, 5) == 120
    # direct product: (-5/2)(-3/2)(-1/2)
    assert pochhammer(Fraction(-5, 2), 3) == Fraction(-15, 8)
    assert pochhammer(Fraction(-7, 2), 3) == Fraction(-105, 8)
    assert pochhammer(Fraction(7, 3), 0) == 1


def test_poly_basicops():
    p = PolyNu([1, 2, 3])
    q = PolyNu([0, -2])
    assert (p + q).coeffs == (Fraction(1), Fraction(0), Fraction(3))
    assert (p * q).coeffs == (Fraction(0), Fraction(-2), Fraction(-4), Fraction(-6))
    assert (NU**3).coeffs == (0, 0, 0, 1)
    assert p.eval_at(2) == 1 + 4 + 12
    assert PolyNu([1, 1]) - PolyNu([1, 1]) == POLY_ZERO
    assert not POLY_ZERO
    assert POLY_ZERO.degree == -1


def test_poly_divmod_exact():
    p = poly_from_roots([0, 1, 2])  # nu(nu-1)(nu-2)
    q, r = p.divmod(PolyNu([-2, 1]))
    assert r == POLY_ZERO
    assert q == poly_from_roots([0, 1])
    with pytest.raises(ValueError):
        p.exact_div(PolyNu([3, 1]))


def test_gcd_shared_factor():
    assert poly_gcd(PolyNu([-1, 0, 1]), PolyNu([-1, 1])) == PolyNu([-1, 1])


def test_gcd_with_zero_normalizes():
    p = PolyNu([Fraction(2, 3), Fraction(-4, 3)])
    g = poly_gcd(p, POLY_ZERO)
    assert g == PolyNu([-1, 2])
    assert poly_gcd(POLY_ZERO, POLY_ZERO) == POLY_ZERO


def test_gcd_long_division_oracle():
    # gcd(nu(nu-1)(nu-2), nu(nu-2)) = nu^2 - 2nu, checked by long division
    a = poly_from_roots([0, 1, 2])
    b = poly_from_roots([0, 2])
    g = poly_gcd(a, b)
    assert g == PolyNu([0, -2, 1])
    for p in (a, b):
        q, r = p.divmod(g)
        assert r == POLY_ZERO
        assert q * g == p


@st.composite
def small_polys(draw, max_deg=5):
    n = draw(st.integers(min_value=0, max_value=max_deg))
    coeffs = draw(st.lists(st.integers(min_value=-9, max_value=9),
                           min_size=n, max_size=n))
    return PolyNu(coeffs)


@given(small_polys(), small_polys())
@settings(max_examples=120, deadline=None)
def test_gcd_divides_both(p, q):
    g = poly_gcd(p, q)
    if g.is_zero():
        assert p.is_zero() and q.is_zero()
        return
    for target in (p, q):
        _, r = target.divmod(g)
        assert r == POLY_ZERO


@given(small_polys(), small_polys())
@settings(max_examples=80, deadline=None)
def test_ratfunc_field_inverse(p, q):
    if p.is_zero() or q.is_zero():
        return
    f = RatFuncNu(p, q)
    assert f * f.inverse() == RatFuncNu(1)
    assert f - f == RatFuncNu(0)


def test_ratfunc_canonical_form():
    f = RatFuncNu(PolyNu([0, 0, 2]), PolyNu([0, -4]))  # 2nu^2 / (-4nu)
    assert f == RatFuncNu(PolyNu([0, Fraction(-1, 2)]), POLY_ONE)
    assert f.den == POLY_ONE
    g = RatFuncNu(1, PolyNu([0, Fraction(2, 3)]))  # 1/( (2/3) nu )
    assert g.den == PolyNu([0, 1])
    assert g.num == PolyNu([Fraction(3, 2)])


def test_ratfunc_eval_and_constants():
    f = RatFuncNu(PolyNu([1, 1]), PolyNu([2]))
    assert f.eval_at(3) == 2
    assert RatFuncNu(Fraction(7, 360)).as_fraction() == Fraction(7, 360)
    with pytest.raises(ValueError):
        RatFuncNu(NU).as_fraction()


def test_linsolve_identity():
    ident = [[RatFuncNu(1), RatFuncNu(0)], [RatFuncNu(0), RatFuncNu(1)]]
    v = [RatFuncNu(NU), RatFuncNu(5)]
    assert linsolve(ident, v) == v


def test_linsolve_constructed_solution():
    m = [[RatFuncNu(NU), RatFuncNu(1)], [RatFuncNu(1), RatFuncNu(NU)]]
    rhs = [RatFuncNu(PolyNu([1, 0, 1])), RatFuncNu(PolyNu([0, 2]))]
    x = linsolve(m, rhs)
    assert x == [RatFuncNu(NU), RatFuncNu(1)]


def test_linsolve_singular():
    m = [[RatFuncNu(NU), RatFuncNu(NU)], [RatFuncNu(1), RatFuncNu(1)]]
    with pytest.raises(SingularSystem):
        linsolve(m, [RatFuncNu(1), RatFuncNu(1)])


@given(st.lists(st.integers(-9, 9), min_size=4, max_size=4),
       st.lists(st.integers(-9, 9), min_size=2, max_size=2))
@settings(max_examples=60, deadline=None)
def test_linsolve_random_2x2(entries, sol):
    a, b, c, d = entries
    m = [[RatFuncNu(PolyNu([a, 1])), RatFuncNu(b)],
         [RatFuncNu(c), RatFuncNu(PolyNu([d, 0, 1]))]]
    x = [RatFuncNu(sol[0]), RatFuncNu(PolyNu([0, sol[1]]))]
    rhs = [m[i][0] * x[0] + m[i][1] * x[1] for i in range(2)]
    try:
        got = linsolve(m, rhs)
    except SingularSystem:
        return
    assert got == x


def test_serialization_roundtrip():
    p = PolyNu([Fraction(1, 3), 0, -2])
    strs = poly_to_strs(p)
    assert strs == ["1/3", "0", "-2"]
    assert poly_from_strs(strs) == p
    assert rat_to_str(Fraction(4, 2)) == "2"
