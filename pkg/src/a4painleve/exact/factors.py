"""Denominator factorizations and residue sums that stay inside Q.

Poles at irrational points are never located. A squarefree factor p of a
denominator is handled as a whole: the residue of f at a root r of p is
R(r) for a polynomial R reduced mod p, and sums over all roots of p are
traces computed from Newton power sums of p.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import Polynomial, poly_gcd, poly_inverse_mod, squarefree_decomposition
from .ratfunc import RationalFunction
from .roots import rational_roots


def denominator_factors(f: RationalFunction) -> list[tuple[Polynomial, int]]:
    """Squarefree factorization of the denominator with rational linear factors split off.

    Factors are monic and pairwise coprime; linear factors come first in each
    multiplicity class, ordered by root.
    """
    out = []
    for part, mult in squarefree_decomposition(f.den):
        rest = part
        for r in rational_roots(part):
            lin = Polynomial((-r, 1))
            out.append((lin, mult))
            rest = rest // lin
        if rest.degree >= 1:
            out.append((rest.monic(), mult))
    return out


def pole_order(f: RationalFunction, p: Polynomial) -> int:
    """Largest m such that p^m divides the denominator of f."""
    if p.is_constant():
        raise ValueError("pole order with respect to a constant")
    m, den = 0, f.den
    while True:
        q, r = divmod(den, p)
        if r:
            return m
        m, den = m + 1, q


def _cofactor(f: RationalFunction, p: Polynomial, mult: int) -> Polynomial:
    return f.den // (p ** mult)


def residue_polynomial(f: RationalFunction, p: Polynomial) -> Polynomial:
    """R mod p with Res_{t=r} f = R(r) for every root r of p.

    Requires p squarefree, dividing the denominator exactly once at each root.
    """
    p = p.monic()
    _check_simple_factor(f, p)
    q = _cofactor(f, p, 1)
    inv = poly_inverse_mod(q * p.derivative(), p)
    return (f.num * inv) % p


def _check_simple_factor(f: RationalFunction, p: Polynomial) -> None:
    if f.den % p:
        raise ValueError(f"{p} does not divide the denominator {f.den}")
    if poly_gcd(p, p.derivative()).degree > 0:
        raise ValueError(f"{p} is not squarefree")
    if poly_gcd(p, f.den // p).degree > 0:
        raise ValueError(f"pole of order > 1 at a root of {p}")


def power_sums(p: Polynomial, count: int) -> list[Fraction]:
    """[s_0, ..., s_{count-1}] with s_k the sum of k-th powers of the roots of p."""
    p = p.monic()
    n = p.degree
    c = [p.coeff(n - j) for j in range(n + 1)]  # p = t^n + c[1] t^(n-1) + ... + c[n]
    s = [Fraction(n)]
    for k in range(1, count):
        acc = -k * c[k] if k <= n else Fraction(0)
        for j in range(1, min(k - 1, n) + 1):
            acc -= c[j] * s[k - j]
        s.append(acc)
    return s


def trace_mod(r: Polynomial, p: Polynomial) -> Fraction:
    """Sum of r(root) over all roots of p, counted with multiplicity."""
    r = r % p.monic()
    s = power_sums(p, max(r.degree + 1, 1))
    return sum((c * s[k] for k, c in enumerate(r.coeffs)), Fraction(0))


def residue_sum_over_factor(f: RationalFunction, p: Polynomial) -> Fraction:
    """Sum of Res_{t=r} f over the roots r of the squarefree factor p (simple poles only)."""
    return trace_mod(residue_polynomial(f, p), p)


def principal_residue_sum(f: RationalFunction, p: Polynomial) -> Fraction:
    """Sum of residues of f over the roots of p, for poles of any order.

    Extracts the partial fraction A/p^m of f belonging to p and reads off the
    1/t coefficient of A/p^m at infinity.
    """
    p = p.monic()
    m = pole_order(f, p)
    if m == 0:
        if poly_gcd(p, f.den).degree > 0:
            raise ValueError(f"{p} shares roots with the denominator without dividing it")
        return Fraction(0)
    pm = p ** m
    q = f.den // pm
    if poly_gcd(q, p).degree > 0:
        raise ValueError(f"{p} is not coprime to its cofactor in the denominator")
    a = (f.num * poly_inverse_mod(q, pm)) % pm
    return a.coeff(pm.degree - 1)


def gcd_free_basis(polys: list[Polynomial]) -> list[Polynomial]:
    """Pairwise coprime monic squarefree polynomials whose products recover every input's roots."""
    basis: list[Polynomial] = []
    for p in polys:
        for part, _ in squarefree_decomposition(p):
            pending = [part]
            while pending:
                a = pending.pop()
                if a.degree < 1:
                    continue
                for k, b in enumerate(basis):
                    g = poly_gcd(a, b)
                    if g.degree >= 1:
                        basis.pop(k)
                        for piece in (g, b // g, a // g):
                            if piece.degree >= 1:
                                pending.append(piece.monic())
                        break
                else:
                    basis.append(a.monic())
    return sorted(basis, key=lambda q: (q.degree, q.coeffs))
