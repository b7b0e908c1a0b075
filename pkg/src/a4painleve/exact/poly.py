"""Dense univariate polynomials over Q in the variable t.

Coefficients are stored low degree first as a tuple of Fractions with no
trailing zeros, so equal polynomials have equal representations.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as igcd
from typing import Iterable

from .limits import check_degree

ZERO = Fraction(0)
ONE = Fraction(1)


def _trim(cs: list[Fraction]) -> tuple[Fraction, ...]:
    while cs and not cs[-1]:
        cs.pop()
    return tuple(cs)


class Polynomial:
    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _trim([Fraction(c) for c in coeffs])
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: tuple[Fraction, ...]) -> Polynomial:
        # trusted constructor: coeffs already trimmed Fractions
        p = object.__new__(cls)
        p.coeffs = coeffs
        p._hash = None
        return p

    @classmethod
    def constant(cls, c) -> Polynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c=1) -> Polynomial:
        return cls([0] * degree + [c])

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 standing in for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else ZERO

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return ZERO

    def valuation(self) -> int:
        """Multiplicity of t as a factor (the zero polynomial has none)."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        raise ValueError("valuation of the zero polynomial")

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def __str__(self) -> str:
        return format_polynomial(self)

    # -- ring operations ---------------------------------------------------

    def __neg__(self) -> Polynomial:
        return Polynomial._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> Polynomial:
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return Polynomial._raw(_trim(out))

    __radd__ = __add__

    def __sub__(self, other) -> Polynomial:
        return self + (-_coerce(other))

    def __rsub__(self, other) -> Polynomial:
        return _coerce(other) - self

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            if not other:
                return Polynomial._raw(())
            return Polynomial._raw(tuple(c * other for c in self.coeffs))
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial._raw(())
        check_degree(len(a) + len(b) - 2)
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Polynomial._raw(_trim(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial._raw((ONE,))
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        if len(rem) - 1 < db:
            return Polynomial._raw(()), self
        inv = 1 / other.lc
        b = other.coeffs
        quot = [ZERO] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db] * inv
            quot[k] = c
            if c:
                for j in range(db + 1):
                    rem[k + j] -= c * b[j]
        return Polynomial._raw(_trim(quot)), Polynomial._raw(_trim(rem[:db]))

    def __floordiv__(self, other) -> Polynomial:
        return divmod(self, other)[0]

    def __mod__(self, other) -> Polynomial:
        return divmod(self, other)[1]

    def exact_div(self, other: Polynomial) -> Polynomial:
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    # -- calculus and evaluation ------------------------------------------

    def __call__(self, x):
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> Polynomial:
        return Polynomial._raw(_trim([k * c for k, c in enumerate(self.coeffs)][1:]))

    def monic(self) -> Polynomial:
        if self.is_zero():
            return self
        lc = self.lc
        if lc == 1:
            return self
        return Polynomial._raw(tuple(c / lc for c in self.coeffs))

    def reflect(self) -> Polynomial:
        """p(-t)."""
        return Polynomial._raw(tuple(-c if k & 1 else c for k, c in enumerate(self.coeffs)))

    def taylor_shift(self, c) -> Polynomial:
        """p(t + c), by repeated synthetic division."""
        cs = list(self.coeffs)
        n = len(cs)
        c = Fraction(c)
        if not c:
            return self
        for i in range(n):
            for k in range(n - 2, i - 1, -1):
                cs[k] += c * cs[k + 1]
        return Polynomial._raw(_trim(cs))

    def is_even(self) -> bool:
        return all(not c for c in self.coeffs[1::2])

    def is_odd(self) -> bool:
        return all(not c for c in self.coeffs[0::2])

    def integer_primitive(self) -> list[int]:
        """Integer coefficients of the primitive multiple with positive leading term."""
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // igcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = igcd(g, v)
        if g == 0:
            return []
        if ints[-1] < 0:
            g = -g
        return [v // g for v in ints]


def _coerce(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return Polynomial.constant(x)
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial")


T = Polynomial((0, 1))


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd; gcd(0, 0) is 0."""
    while b:
        a, b = b, (a % b).monic()
    return a.monic()


def poly_xgcd(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial, Polynomial]:
    """(g, u, v) with u*a + v*b = g and g monic."""
    r0, r1 = a, b
    s0, s1 = Polynomial.constant(1), Polynomial()
    t0, t1 = Polynomial(), Polynomial.constant(1)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = 1 / r0.lc
    return r0 * inv, s0 * inv, t0 * inv


def poly_inverse_mod(a: Polynomial, m: Polynomial) -> Polynomial:
    g, u, _ = poly_xgcd(a % m, m)
    if g != 1:
        raise ArithmeticError(f"{a} is not invertible modulo {m}")
    return u % m


def squarefree_decomposition(p: Polynomial) -> list[tuple[Polynomial, int]]:
    """Yun's algorithm: monic pairwise-coprime squarefree factors with multiplicities."""
    if p.is_constant():
        return []
    p = p.monic()
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p // a
    c = dp // a
    out = []
    k = 1
    while not b.is_constant():
        d = c - b.derivative()
        g = poly_gcd(b, d)
        if not g.is_constant():
            out.append((g, k))
        b = b // g
        c = d // g
        k += 1
    return out


def squarefree_part(p: Polynomial) -> Polynomial:
    if p.is_constant():
        return Polynomial.constant(1)
    return (p // poly_gcd(p, p.derivative())).monic()


def format_polynomial(p: Polynomial, var: str = "t") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            num, den = a.numerator, a.denominator
            body = mono if num == 1 else f"{num}*{mono}"
            if den != 1:
                body += f"/{den}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
