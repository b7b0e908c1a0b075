import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from a4painleve.exact import (
    INFINITY,
    DegreeCapExceeded,
    ParseError,
    Polynomial,
    RationalFunction,
    TruncationError,
    caps,
    denominator_factors,
    expand,
    format_rational_function,
    gcd_free_basis,
    parse_rational,
    parse_rational_function,
    poly_gcd,
    principal_residue_sum,
    rational_roots,
    residue_at,
    residue_at_infinity,
    residue_polynomial,
    residue_sum_over_factor,
    squarefree_decomposition,
    trace_mod,
)
from a4painleve.exact.poly import poly_inverse_mod, poly_xgcd

T = sp.Symbol("t")

small = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.lists(small, min_size=0, max_size=6).map(Polynomial)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


def to_sympy(p: Polynomial) -> sp.Poly:
    return sp.Poly([sp.Rational(c.numerator, c.denominator) for c in reversed(p.coeffs)] or [0], T,
                   domain="QQ")


def rf_to_sympy(f: RationalFunction):
    return to_sympy(f.num).as_expr() / to_sympy(f.den).as_expr()


# -- polynomials -------------------------------------------------------------------

def test_polynomial_basics():
    p = Polynomial((1, 0, 2))
    assert p.degree == 2 and p.lc == 2 and p.coeff(5) == 0
    assert Polynomial().degree == -1
    assert p(Fraction(1, 2)) == Fraction(3, 2)
    assert p.derivative() == Polynomial((0, 4))
    assert str(Polynomial((0, Fraction(-1, 3)))) == "-t/3"
    assert str(Polynomial((0, 1, Fraction(2, 3)))) == "2*t^2/3 + t"
    assert p.reflect() == p and Polynomial((0, 1)).reflect() == Polynomial((0, -1))
    assert Polynomial((0, 0, 1, 1)).valuation() == 2


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - b) + b == a


@given(polys, nonzero_polys)
def test_division_identity(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(nonzero_polys, nonzero_polys)
@settings(max_examples=60)
def test_gcd_against_sympy(a, b):
    g = poly_gcd(a, b)
    assert a % g == Polynomial() and b % g == Polynomial()
    expected = sp.gcd(to_sympy(a), to_sympy(b)).monic()
    assert to_sympy(g) == expected


@given(nonzero_polys, nonzero_polys)
@settings(max_examples=60)
def test_xgcd_bezout(a, b):
    g, s, t = poly_xgcd(a, b)
    assert s * a + t * b == g


def test_inverse_mod():
    m = Polynomial((-2, 0, 1))
    a = Polynomial((1, 1))
    inv = poly_inverse_mod(a, m)
    assert (inv * a) % m == Polynomial((1,))


@given(st.lists(st.tuples(st.integers(-4, 4), st.integers(1, 3)), min_size=1, max_size=3))
@settings(max_examples=50)
def test_squarefree_decomposition_multiplies_back(factors):
    p = Polynomial((1,))
    for root, mult in factors:
        p = p * Polynomial((-root, 1)) ** mult
    parts = squarefree_decomposition(p)
    prod = Polynomial((1,))
    for q, m in parts:
        prod = prod * q ** m
        assert poly_gcd(q, q.derivative()).degree == 0
    assert prod == p.monic()


def test_degree_cap():
    with caps(degree_cap=4):
        with pytest.raises(DegreeCapExceeded):
            Polynomial((0, 1)) ** 5


# -- rational roots --------------------------------------------------------------------

@given(st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=7), min_size=0, max_size=4),
       st.lists(st.integers(-5, 5), min_size=0, max_size=3))
@settings(max_examples=80)
def test_rational_roots_against_sympy(roots, extra):
    p = Polynomial((1,))
    for r in roots:
        p = p * Polynomial((-r, 1))
    p = p * Polynomial([1] + [Fraction(x) for x in extra] + [3]) if extra else p * Polynomial((1, 0, 1))
    got = sorted(set(rational_roots(p)))
    expected = sorted(Fraction(int(sp.numer(r)), int(sp.denom(r)))
                      for r in sp.roots(to_sympy(p), filter="Q"))
    assert got == expected


def test_rational_roots_large_constant():
    p = Polynomial((-(10**12 + 39) * 7, 0, 0, 3 * (10**0)))  # 3 t^3 - 7(10^12+39)
    assert rational_roots(p) == []
    q = Polynomial((Fraction(-123456789, 1000),)) + Polynomial((0, 1))
    assert rational_roots(q) == [Fraction(123456789, 1000)]


# -- rational functions ----------------------------------------------------------------

def test_rational_function_normalizes():
    f = RationalFunction(Polynomial((0, 2)), Polynomial((0, 0, 4)))
    assert f.num == Polynomial((Fraction(1, 2),)) and f.den == Polynomial((0, 1))
    assert f == parse_rational_function("1/(2*t)")
    with pytest.raises(ZeroDivisionError):
        RationalFunction(Polynomial((1,)), Polynomial())


@given(polys, nonzero_polys, polys, nonzero_polys)
@settings(max_examples=60)
def test_field_operations_against_sympy(a, b, c, d):
    f, g = RationalFunction(a, b), RationalFunction(c, d)
    A, B, C, D = map(to_sympy, (a, b, c, d))
    # compare n1/d1 with n2/d2 by cross multiplication over QQ[t]
    for ours, n2, d2 in ((f + g, A * D + C * B, B * D),
                         (f * g, A * C, B * D),
                         (f.derivative(), A.diff(T) * B - A * B.diff(T), B * B)):
        assert to_sympy(ours.num) * d2 == n2 * to_sympy(ours.den)


@given(polys, nonzero_polys)
@settings(max_examples=60)
def test_format_parse_round_trip(a, b):
    f = RationalFunction(a, b)
    assert parse_rational_function(format_rational_function(f)) == f


# -- parser -----------------------------------------------------------------------------

@pytest.mark.parametrize("text, expected", [
    ("t", "t"), ("1/t", "1/t"), ("-1/t", "-1/t"), ("(t^2+1)/t", "(t^2 + 1)/t"),
    ("t/3", "t/3"), ("2*t^-1", "2/t"), ("-(t-1)^2", "-t^2 + 2*t - 1"),
])
def test_parse_examples(text, expected):
    assert str(parse_rational_function(text)) == expected


@pytest.mark.parametrize("text, pos", [("1.5*t", 1), ("t+", 2), ("2x", 1), ("(t", 2), ("1/0", 1)])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as err:
        parse_rational_function(text)
    assert err.value.pos == pos


def test_parse_rational():
    assert parse_rational(" -3/6 ") == Fraction(-1, 2)
    for bad in ("0.5", "1/0", "a"):
        with pytest.raises(ParseError):
            parse_rational(bad)


# -- expansions and residues ---------------------------------------------------------------

def test_expand_at_infinity_against_sympy():
    f = parse_rational_function("(t^3 + 2)/(t^2 - 3*t + 5)")
    s = expand(f, INFINITY, -6)
    ser = sp.series(rf_to_sympy(f).subs(T, 1 / T), T, 0, 8).removeO()
    for k in range(1, -7, -1):
        assert s[k] == Fraction(str(ser.coeff(T, -k)))
    with pytest.raises(TruncationError):
        s[-7]


def test_expand_at_finite_point():
    f = parse_rational_function("1/(t^2-1)")
    s = expand(f, Fraction(1), 2)
    assert s.top == -1 and s[-1] == Fraction(1, 2) and s[0] == Fraction(-1, 4)
    assert residue_at(f, 1) == Fraction(1, 2) and residue_at(f, -1) == Fraction(-1, 2)
    assert residue_at_infinity(f) == 0
    assert residue_at_infinity(parse_rational_function("1/t")) == -1


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=4, unique=True), st.data())
@settings(max_examples=40)
def test_residue_theorem_rational_poles(poles, data):
    f = RationalFunction(Polynomial((0,)))
    for c in poles:
        a = data.draw(st.fractions(min_value=-5, max_value=5, max_denominator=5))
        f = f + RationalFunction(Polynomial((a,)), Polynomial((-c, 1)))
    total = sum(residue_at(f, c) for c in poles)
    assert total + residue_at_infinity(f) == 0


def test_residue_sums_over_irrational_factor():
    # f = (t + 3)/(t^2 - 2): residues at +-sqrt2 are (1 +- 3/sqrt2)/2, sum 1
    f = parse_rational_function("(t+3)/(t^2-2)")
    p = Polynomial((-2, 0, 1))
    assert residue_sum_over_factor(f, p) == 1
    r = residue_polynomial(f, p)
    assert r == Polynomial((Fraction(1, 2), Fraction(3, 4)))
    assert trace_mod(r, p) == 1
    g = parse_rational_function("(t+3)/(t^2-2)^2")
    exact = sum(sp.residue(rf_to_sympy(g), T, z) for z in (sp.sqrt(2), -sp.sqrt(2)))
    assert principal_residue_sum(g, p) == Fraction(str(sp.nsimplify(exact)))


def test_denominator_factors_and_basis():
    f = parse_rational_function("1/((t-1)^2*(t^2-3)*t)")
    facs = dict((str(p), m) for p, m in denominator_factors(f))
    assert facs == {"t - 1": 2, "t^2 - 3": 1, "t": 1}
    basis = gcd_free_basis([Polynomial((-1, 0, 1)), Polynomial((-1, 1)) * Polynomial((2, 1))])
    prod_degrees = sorted(p.degree for p in basis)
    assert prod_degrees == [1, 1, 1]
    for i, p in enumerate(basis):
        for q in basis[i + 1:]:
            assert poly_gcd(p, q).degree == 0


def test_random_factor_residue_sums_against_sympy():
    rng = random.Random(7)
    for _ in range(15):
        a, b = rng.randint(1, 9), rng.randint(-5, 5)
        p = Polynomial((a, b, 0, 1))  # cubic t^3 + b t + a
        if rational_roots(p):
            continue
        num = Polynomial([Fraction(rng.randint(-4, 4)) for _ in range(3)])
        f = RationalFunction(num, p)
        # p carries every finite pole, so the sum is minus the residue at infinity
        at_inf = sp.series(rf_to_sympy(f).subs(T, 1 / T), T, 0, 3).removeO().coeff(T, 1)
        assert residue_sum_over_factor(f, p) == Fraction(str(at_inf))
