"""Rational functions in t over Q, kept in reduced form with monic denominator."""

from __future__ import annotations

from fractions import Fraction

from .limits import check_degree
from .poly import Polynomial, format_polynomial, poly_gcd

_ONE_POLY = Polynomial((1,))


class RationalFunction:
    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        num = _as_poly(num)
        den = _ONE_POLY if den is None else _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = num, _ONE_POLY
        elif not den.is_constant():
            g = poly_gcd(num, den)
            if not g.is_constant():
                num, den = num // g, den // g
        lc = den.lc
        if lc != 1:
            num, den = num * (1 / lc), den.monic()
        check_degree(max(num.degree, den.degree))
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _reduced(cls, num: Polynomial, den: Polynomial) -> RationalFunction:
        r = object.__new__(cls)
        r.num, r.den, r._hash = num, den, None
        return r

    @classmethod
    def t(cls) -> RationalFunction:
        return cls._reduced(Polynomial((0, 1)), _ONE_POLY)

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def is_constant(self) -> bool:
        return self.den.is_constant() and self.num.is_constant()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, Polynomial)):
            return self == RationalFunction(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- arithmetic -----------------------------------------------------------

    def __neg__(self) -> RationalFunction:
        return RationalFunction._reduced(-self.num, self.den)

    def __add__(self, other) -> RationalFunction:
        other = _coerce(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        g = poly_gcd(self.den, other.den)
        a_co = other.den // g
        b_co = self.den // g
        num = self.num * a_co + other.num * b_co
        return RationalFunction(num, self.den * a_co)

    __radd__ = __add__

    def __sub__(self, other) -> RationalFunction:
        return self + (-_coerce(other))

    def __rsub__(self, other) -> RationalFunction:
        return _coerce(other) - self

    def __mul__(self, other) -> RationalFunction:
        if isinstance(other, (int, Fraction)):
            if not other:
                return RationalFunction._reduced(Polynomial(), _ONE_POLY)
            return RationalFunction._reduced(self.num * Fraction(other), self.den)
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return RationalFunction._reduced(Polynomial(), _ONE_POLY)
        # cross-cancel first so the products stay small
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        num = (self.num // g1) * (other.num // g2)
        den = (self.den // g2) * (other.den // g1)
        return RationalFunction(num, den)

    __rmul__ = __mul__

    def reciprocal(self) -> RationalFunction:
        if self.is_zero():
            raise ZeroDivisionError("reciprocal of the zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other) -> RationalFunction:
        return self * _coerce(other).reciprocal()

    def __rtruediv__(self, other) -> RationalFunction:
        return _coerce(other) * self.reciprocal()

    def __pow__(self, n: int) -> RationalFunction:
        if n < 0:
            return self.reciprocal() ** (-n)
        return RationalFunction._reduced(self.num ** n, self.den ** n)

    # -- calculus -------------------------------------------------------------

    def derivative(self) -> RationalFunction:
        n, d = self.num, self.den
        if d.is_constant():
            return RationalFunction._reduced(n.derivative(), d)
        return RationalFunction(n.derivative() * d - n * d.derivative(), d * d)

    def __call__(self, x):
        dv = self.den(x)
        if not dv:
            raise ZeroDivisionError(f"pole at t = {x}")
        return self.num(x) / dv

    def reflect(self) -> RationalFunction:
        """f(-t)."""
        return RationalFunction(self.num.reflect(), self.den.reflect())

    def degree_at_infinity(self) -> int | None:
        """deg(num) - deg(den); None for the zero function."""
        if self.is_zero():
            return None
        return self.num.degree - self.den.degree

    # -- display --------------------------------------------------------------

    def __str__(self) -> str:
        return format_rational_function(self)

    def __repr__(self) -> str:
        return f"RationalFunction({self})"


def _as_poly(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return Polynomial.constant(x)
    if isinstance(x, (list, tuple)):
        return Polynomial(x)
    raise TypeError(f"cannot build a polynomial from {type(x).__name__}")


def _coerce(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    return RationalFunction(_as_poly(x))


def const(c) -> RationalFunction:
    return RationalFunction(Polynomial.constant(c))


def _needs_parens(p: Polynomial, s: str) -> bool:
    return sum(1 for c in p.coeffs if c) > 1 or "/" in s


def format_rational_function(f: RationalFunction, var: str = "t") -> str:
    """Render in the syntax accepted by the expression parser."""
    num_s = format_polynomial(f.num, var)
    if f.den.is_constant():
        return num_s
    den_s = format_polynomial(f.den, var)
    if _needs_parens(f.num, num_s):
        num_s = f"({num_s})"
    if sum(1 for c in f.den.coeffs if c) > 1:
        den_s = f"({den_s})"
    return f"{num_s}/{den_s}"


ZERO_RF = RationalFunction(Polynomial())
ONE_RF = RationalFunction(Polynomial((1,)))
T_RF = RationalFunction(Polynomial((0, 1)))
