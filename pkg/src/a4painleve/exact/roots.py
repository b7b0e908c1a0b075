"""Rational roots of polynomials over Q.

Roots are found p-adically: pick a prime l for which the squarefree integer
polynomial stays squarefree mod l, find its roots mod l by brute force, lift
each one by Newton iteration until l^k exceeds twice the numerator and
denominator bounds, then recover the candidate by rational reconstruction
and confirm it exactly. Every rational root reduces to a simple root mod l,
so nothing is missed.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import Polynomial, squarefree_part

_PRIMES = [p for p in range(3, 2000) if all(p % d for d in range(2, int(p ** 0.5) + 1))]


def _eval_mod(cs: list[int], x: int, m: int) -> int:
    acc = 0
    for c in reversed(cs):
        acc = (acc * x + c) % m
    return acc


def _deriv(cs: list[int]) -> list[int]:
    return [k * c for k, c in enumerate(cs)][1:]


def _trim_mod(cs: list[int], m: int) -> list[int]:
    out = [c % m for c in cs]
    while out and out[-1] == 0:
        out.pop()
    return out


def _gcd_mod(a: list[int], b: list[int], m: int) -> list[int]:
    a, b = _trim_mod(a, m), _trim_mod(b, m)
    while b:
        inv = pow(b[-1], -1, m)
        r = list(a)
        while len(r) >= len(b):
            q = r[-1] * inv % m
            shift = len(r) - len(b)
            for j, c in enumerate(b):
                r[shift + j] = (r[shift + j] - q * c) % m
            r = _trim_mod(r, m)
            if not r:
                break
        a, b = b, r
    return a


def _good_prime(cs: list[int]) -> int:
    lead = cs[-1]
    d = _deriv(cs)
    for p in _PRIMES:
        if lead % p == 0:
            continue
        if len(_gcd_mod(cs, d, p)) == 1:
            return p
    raise ArithmeticError("no suitable prime found for rational root search")


def _reconstruct(a: int, m: int, num_bound: int, den_bound: int) -> Fraction | None:
    # extended Euclid on (m, a), stopping once the remainder drops below num_bound
    r0, r1 = m, a % m
    s0, s1 = 0, 1
    while r1 > num_bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > den_bound:
        return None
    return Fraction(r1, s1)


def _integer_roots_candidates(cs: list[int]) -> list[Fraction]:
    if len(cs) == 2:
        return [Fraction(-cs[0], cs[1])]
    p = _good_prime(cs)
    num_bound, den_bound = abs(cs[0]), abs(cs[-1])
    target = 2 * num_bound * den_bound + 1
    d = _deriv(cs)
    found = []
    for x0 in range(p):
        if _eval_mod(cs, x0, p):
            continue
        x, m = x0, p
        while m < target:
            m = m * m
            fx = _eval_mod(cs, x, m)
            dfx = _eval_mod(d, x, m)
            x = (x - fx * pow(dfx, -1, m)) % m
        cand = _reconstruct(x, m, num_bound, den_bound)
        if cand is not None:
            found.append(cand)
    return found


def rational_roots(p: Polynomial) -> list[Fraction]:
    """Distinct rational roots of a nonzero polynomial, sorted ascending."""
    if p.is_zero():
        raise ValueError("rational roots of the zero polynomial")
    q = squarefree_part(p)
    roots = []
    if q.degree >= 1 and not q.coeff(0):
        roots.append(Fraction(0))
        q = q // Polynomial((0, 1))
    if q.degree >= 1:
        cs = q.integer_primitive()
        for cand in _integer_roots_candidates(cs):
            if cand and not q(cand):
                roots.append(cand)
    return sorted(set(roots))
