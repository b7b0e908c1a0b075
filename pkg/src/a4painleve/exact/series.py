"""Truncated Laurent expansions of rational functions at infinity or at a rational point."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .poly import Polynomial
from .ratfunc import RationalFunction


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"

    def __str__(self) -> str:
        return "oo"

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()


class TruncationError(LookupError):
    """A coefficient beyond the computed range was requested."""


@dataclass(frozen=True)
class LaurentSeries:
    """Coefficients of a Laurent expansion, exact up to a recorded truncation.

    At infinity the series runs downward in powers of t from `top` and every
    exponent >= `bound` is exact. At a finite point c it runs upward in powers
    of (t - c) from `top` (minus the pole order) and every exponent <= `bound`
    is exact. `top` is None for the zero function.
    """

    point: object
    top: int | None
    bound: int
    coeffs: dict[int, Fraction] = field(default_factory=dict)

    @property
    def at_infinity(self) -> bool:
        return self.point is INFINITY

    def _in_range(self, k: int) -> bool:
        return k >= self.bound if self.at_infinity else k <= self.bound

    def __getitem__(self, k: int) -> Fraction:
        if not self._in_range(k):
            side = "below" if self.at_infinity else "above"
            raise TruncationError(f"exponent {k} lies {side} the truncation at {self.bound}")
        return self.coeffs.get(k, Fraction(0))

    def exponents(self) -> list[int]:
        """Exponents with nonzero coefficient, in expansion order."""
        return sorted(self.coeffs, reverse=self.at_infinity)

    def partial_sum(self) -> RationalFunction:
        """The truncated series as a rational function."""
        out = RationalFunction(Polynomial())
        if self.at_infinity:
            base = RationalFunction(Polynomial((0, 1)))
        else:
            base = RationalFunction(Polynomial((-self.point, 1)))
        for k, c in self.coeffs.items():
            out = out + (base ** k) * c
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (self.point == other.point and self.bound == other.bound
                and self.top == other.top and self.coeffs == other.coeffs)


def _series_divide(a: list[Fraction], b: list[Fraction], n: int) -> list[Fraction]:
    """First n coefficients of the power series a/b, b[0] != 0."""
    out = []
    inv = 1 / b[0]
    for k in range(n):
        acc = a[k] if k < len(a) else Fraction(0)
        for j in range(1, min(k, len(b) - 1) + 1):
            acc -= b[j] * out[k - j]
        out.append(acc * inv)
    return out


def expand(f: RationalFunction, point=INFINITY, bound: int = -12) -> LaurentSeries:
    """Laurent expansion of f at `point`.

    At infinity `bound` is the lowest exponent kept; at a finite rational point
    it is the highest.
    """
    if f.is_zero():
        return LaurentSeries(point, None, bound, {})
    if point is INFINITY:
        n, d = f.num.degree, f.den.degree
        top = n - d
        count = top - bound + 1
        if count <= 0:
            return LaurentSeries(point, top, bound, {})
        num_rev = list(reversed(f.num.coeffs))
        den_rev = list(reversed(f.den.coeffs))
        cs = _series_divide(num_rev, den_rev, count)
        coeffs = {top - k: c for k, c in enumerate(cs) if c}
        return LaurentSeries(point, top, bound, coeffs)

    c = Fraction(point)
    num = f.num.taylor_shift(c)
    den = f.den.taylor_shift(c)
    m = den.valuation()
    v = num.valuation()
    top = v - m
    den_cs = list(den.coeffs[m:])
    num_cs = list(num.coeffs[v:])
    count = bound - top + 1
    if count <= 0:
        return LaurentSeries(c, top, bound, {})
    cs = _series_divide(num_cs, den_cs, count)
    coeffs = {top + k: x for k, x in enumerate(cs) if x}
    return LaurentSeries(c, top, bound, coeffs)


def residue_at_infinity(f: RationalFunction) -> Fraction:
    """Res at t = oo, i.e. minus the coefficient of 1/t at infinity."""
    return -expand(f, INFINITY, -1)[-1]


def residue_at(f: RationalFunction, c) -> Fraction:
    return expand(f, Fraction(c), -1)[-1]
