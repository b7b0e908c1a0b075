"""Local structure of solutions: pole types at infinity and finite pole patterns.

At infinity each component has at most a simple pole, and the set of
components carrying one is one of four shapes:

    A1(i)  f_i                      leading coefficient t
    A2(i)  f_i, f_{i+1}, f_{i+3}    t, t, -t
    B(i)   f_i, f_{i+1}, f_{i+2}    t/3 each
    C      all five                 t/5 each

At a finite pole every component has at most a simple pole, with residue
vector given by one of three patterns based at some index i:

    1: f_i -> +1, f_{i+1} -> -1
    2: f_i -> -1, f_{i+2} -> +1
    3: f_{i+1} -> 3, f_{i+2} -> 1, f_{i+3} -> -1, f_{i+4} -> -3
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import (
    INFINITY,
    LaurentSeries,
    Polynomial,
    RationalFunction,
    expand,
    gcd_free_basis,
    poly_gcd,
    rational_roots,
    residue_at,
    residue_at_infinity,
    residue_polynomial,
    trace_mod,
)
from .system import N, ParamVec, SolutionTuple

F0 = Fraction(0)
THIRD = Fraction(1, 3)
FIFTH = Fraction(1, 5)

KINDS = ("A1", "A2", "B", "C")


class TaxonomyError(ValueError):
    """The poles at infinity match none of the four admissible shapes."""


@dataclass(frozen=True)
class InfinityType:
    kind: str
    index: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown pole type {self.kind!r}")
        if self.kind == "C":
            object.__setattr__(self, "index", None)
        elif self.index is None:
            raise ValueError(f"type {self.kind} needs a base index")
        else:
            object.__setattr__(self, "index", self.index % N)

    def pole_set(self) -> frozenset[int]:
        i = self.index
        if self.kind == "A1":
            return frozenset({i})
        if self.kind == "A2":
            return frozenset({i, (i + 1) % N, (i + 3) % N})
        if self.kind == "B":
            return frozenset({i, (i + 1) % N, (i + 2) % N})
        return frozenset(range(N))

    def __str__(self) -> str:
        return self.kind if self.kind == "C" else f"{self.kind}({self.index})"

    @classmethod
    def parse(cls, text: str) -> InfinityType:
        """'C', 'B:2', 'A1(0)' or 'A2 3'."""
        cleaned = text.strip().upper().replace("(", " ").replace(")", " ").replace(":", " ")
        parts = cleaned.split()
        if not parts:
            raise ValueError("empty pole type")
        kind = parts[0]
        if kind == "C":
            if len(parts) > 1:
                raise ValueError("type C takes no index")
            return cls("C")
        if len(parts) != 2:
            raise ValueError(f"type {kind} needs exactly one base index")
        return cls(kind, int(parts[1]))


def _type_from_pole_set(poles: frozenset[int]) -> InfinityType:
    if len(poles) == N:
        return InfinityType("C")
    for i in range(N):
        for kind in ("A1", "A2", "B"):
            t = InfinityType(kind, i)
            if t.pole_set() == poles:
                return t
    raise TaxonomyError(f"components {sorted(poles)} with a pole at infinity fit no admissible type")


def classify_infinity(sol: SolutionTuple) -> InfinityType:
    poles = set()
    for j, f in enumerate(sol):
        d = f.degree_at_infinity()
        if d is None or d <= 0:
            continue
        if d > 1:
            raise TaxonomyError(f"f{j} has a pole of order {d} at infinity")
        poles.add(j)
    return _type_from_pole_set(frozenset(poles))


@dataclass(frozen=True)
class InfinityProfile:
    leading: tuple[Fraction, ...]
    subleading: tuple[Fraction, ...]


def _place(base: int, values: list[Fraction]) -> tuple[Fraction, ...]:
    out = [F0] * N
    for k, v in enumerate(values):
        out[(base + k) % N] = Fraction(v)
    return tuple(out)


def leading_coefficients(kind: InfinityType) -> tuple[Fraction, ...]:
    i = kind.index
    if kind.kind == "A1":
        return _place(i, [1, 0, 0, 0, 0])
    if kind.kind == "A2":
        return _place(i, [1, 1, 0, -1, 0])
    if kind.kind == "B":
        return _place(i, [THIRD, THIRD, THIRD, 0, 0])
    return (FIFTH,) * N


def predicted_profile(kind: InfinityType, params: ParamVec) -> InfinityProfile:
    """Coefficients of t and 1/t at infinity, from closed forms in the parameters."""
    lead = leading_coefficients(kind)
    if kind.kind == "C":
        sub = tuple(3 * params[j + 1] + params[j + 2] - params[j + 3] - 3 * params[j + 4]
                    for j in range(N))
        return InfinityProfile(lead, sub)
    a = params.rotated(kind.index)
    if kind.kind == "A1":
        sub = [-a[1] + a[2] - a[3] + a[4], a[1], -a[2], a[3], -a[4]]
    elif kind.kind == "A2":
        sub = [
            a[0] - 1 - 2 * a[2] + 2 * a[4],
            1 - a[1] - 2 * a[2] + 2 * a[4],
            a[2],
            -a[0] + a[1] + 3 * a[2] - 3 * a[4],
            -a[4],
        ]
    else:
        sub = [
            a[1] - a[2] - 3 * a[3] - a[4],
            a[2] - a[0] - a[3] + a[4],
            a[0] - a[1] + a[3] + 3 * a[4],
            3 * a[3],
            -3 * a[4],
        ]
    return InfinityProfile(lead, _place(kind.index, sub))


# -- formal expansion at infinity ---------------------------------------------------

def _solve_unique(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Unique solution of an exact overdetermined system; raises if none or many."""
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((k for k in range(r, len(m)) if m[k][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for k in range(len(m)):
            if k != r and m[k][c]:
                factor = m[k][c]
                m[k] = [x - factor * y for x, y in zip(m[k], m[r])]
        pivots.append(c)
        r += 1
    if len(pivots) < ncols:
        raise ArithmeticError("coefficient system is underdetermined")
    if any(row[-1] for row in m[r:]):
        raise ArithmeticError("coefficient system is inconsistent")
    return [m[k][-1] for k in range(ncols)]


def recurrence_expand(kind: InfinityType, params: ParamVec, floor: int = -12) -> tuple[LaurentSeries, ...]:
    """Formal solution at infinity of the given type, down to t^floor.

    Substitutes f_j = sum_k c_j[k] t^k into the system and solves for one
    power of t at a time: the t^(l+1) equations determine the level-l
    coefficients, which enter linearly through the leading terms, together
    with sum_j c_j[l] = 0 from the normalization of the sum.
    """
    if floor > -1:
        raise ValueError("floor must be at most -1")
    lead = leading_coefficients(kind)
    c = [{1: lead[j]} if lead[j] else {} for j in range(N)]

    def co(j: int, k: int) -> Fraction:
        return c[j % N].get(k, F0)

    def alt(j: int, k: int) -> Fraction:
        return co(j + 1, k) - co(j + 2, k) + co(j + 3, k) - co(j + 4, k)

    matrix = []
    for j in range(N):
        row = [F0] * N
        for d, sign in ((1, 1), (2, -1), (3, 1), (4, -1)):
            row[(j + d) % N] += sign * lead[j]
        row[j] += alt(j, 1)
        matrix.append(row)
    matrix.append([Fraction(1)] * N)

    for level in range(0, floor - 1, -1):
        power = level + 1
        rhs = []
        for j in range(N):
            known = (power + 1) * co(j, power + 1)
            if power == 0:
                known -= params[j]
            for p in range(level + 1, 2):
                q = power - p
                if level < q <= 1:
                    known -= co(j, p) * alt(j, q)
            rhs.append(known)
        rhs.append(F0)
        values = _solve_unique(matrix, rhs)
        for j, v in enumerate(values):
            if v:
                c[j][level] = v

    out = []
    for j in range(N):
        coeffs = {k: v for k, v in c[j].items() if v}
        top = max(coeffs) if coeffs else None
        out.append(LaurentSeries(INFINITY, top, floor, coeffs))
    return tuple(out)


def expansion_agreement(sol: SolutionTuple, params: ParamVec, floor: int = -12) -> list[str]:
    """Compare exact expansions of sol at infinity with the formal recurrence; return mismatches."""
    kind = classify_infinity(sol)
    formal = recurrence_expand(kind, params, floor)
    problems = []
    for j in range(N):
        actual = expand(sol[j], INFINITY, floor)
        for k in range(1, floor - 1, -1):
            if actual[k] != formal[j][k]:
                problems.append(f"f{j}: t^{k} coefficient {actual[k]} vs recurrence {formal[j][k]}")
    return problems


# -- finite poles ------------------------------------------------------------------

@dataclass(frozen=True)
class FinitePattern:
    number: int
    index: int

    def residues(self) -> tuple[Fraction, ...]:
        i = self.index
        if self.number == 1:
            return _place(i, [1, -1, 0, 0, 0])
        if self.number == 2:
            return _place(i, [-1, 0, 1, 0, 0])
        return _place(i, [0, 3, 1, -1, -3])

    def __str__(self) -> str:
        return f"pattern {self.number} at i={self.index}"


ALL_PATTERNS = tuple(FinitePattern(n, i) for n in (1, 2, 3) for i in range(N))
_BY_RESIDUES = {p.residues(): p for p in ALL_PATTERNS}
ADMISSIBLE_RESIDUES = {Fraction(v) for v in (0, 1, -1, 3, -3)}


def match_pattern(residues) -> FinitePattern | None:
    return _BY_RESIDUES.get(tuple(Fraction(r) for r in residues))


@dataclass
class PoleProfile:
    """Residue data at one pole location.

    `location` is INFINITY, a Fraction, or a squarefree Polynomial whose roots
    are all irrational. For a polynomial location `residues` holds the sum of
    residues over its roots. `patterns` maps each finite pattern present to the
    factor of the location whose roots carry it.
    """

    location: object
    residues: tuple[Fraction, ...]
    patterns: dict[FinitePattern, Polynomial] = field(default_factory=dict)

    def describe(self) -> str:
        res = ", ".join(str(r) for r in self.residues)
        if isinstance(self.location, Polynomial):
            pats = ", ".join(f"{p} on {q.degree} roots" for p, q in self.patterns.items())
            return f"roots of {self.location}: residue sums ({res}); {pats}"
        pats = ", ".join(str(p) for p in self.patterns)
        where = "t = oo" if self.location is INFINITY else f"t = {self.location}"
        return f"{where}: residues ({res})" + (f"; {pats}" if pats else "")


@dataclass
class PoleAudit:
    profiles: list[PoleProfile]
    failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok


def _is_odd_integer(x: Fraction) -> bool:
    return x.denominator == 1 and x.numerator % 2 == 1


def _split_roots_by_pattern(p: Polynomial, rs: list[Polynomial]) -> tuple[dict[FinitePattern, Polynomial], int]:
    """Factor of p whose roots r have residue vector (R_0(r), ..., R_4(r)) equal to each pattern."""
    counts = {}
    covered = 0
    for pat in ALL_PATTERNS:
        g = p
        for r, target in zip(rs, pat.residues()):
            g = poly_gcd(g, r - target)
            if g.degree < 1:
                break
        if g.degree >= 1:
            counts[pat] = g
            covered += g.degree
    return counts, covered


def finite_pole_audit(sol: SolutionTuple, params: ParamVec | None = None) -> PoleAudit:
    """Check every finite pole against the admissible patterns.

    Rational poles are expanded directly. Each remaining factor of the
    denominators is split exactly by residue vector with gcds against the
    residue polynomials, so every root is assigned a pattern without leaving
    Q. Also checks the +-c pairing and the parity rule linking a pole at 0 to
    the residue at infinity.
    """
    failures: list[str] = []
    profiles: list[PoleProfile] = []

    res_inf = tuple(residue_at_infinity(f) for f in sol)
    profiles.append(PoleProfile(INFINITY, res_inf))
    for j, r in enumerate(res_inf):
        if r.denominator != 1:
            failures.append(f"f{j}: residue at infinity {r} is not an integer")
            continue
        pole_at_zero = not sol[j].den.coeff(0) and sol[j].den.degree >= 1
        if _is_odd_integer(r) != pole_at_zero:
            failures.append(
                f"f{j}: residue at infinity {r} is {'odd' if _is_odd_integer(r) else 'even'} "
                f"but t = 0 is {'a pole' if pole_at_zero else 'not a pole'}")

    dens = [f.den for f in sol if f.den.degree >= 1]
    basis = gcd_free_basis(dens)
    rational_residues: dict[Fraction, tuple[Fraction, ...]] = {}

    for p in basis:
        roots = rational_roots(p)
        rest = p
        for c in roots:
            rest = rest // Polynomial((-c, 1))
            vec = []
            for j, f in enumerate(sol):
                s = expand(f, c, -1)
                if s.top is not None and s.top < -1:
                    failures.append(f"f{j}: pole of order {-s.top} at t = {c}")
                vec.append(s[-1])
            vec = tuple(vec)
            rational_residues[c] = vec
            pat = match_pattern(vec)
            profiles.append(PoleProfile(c, vec, {pat: Polynomial((-c, 1))} if pat else {}))
            if any(v not in ADMISSIBLE_RESIDUES for v in vec):
                failures.append(f"t = {c}: residues {_fmt(vec)} outside {{0, +-1, +-3}}")
            elif pat is None:
                failures.append(f"t = {c}: residues {_fmt(vec)} match no pole pattern")
        if rest.degree < 1:
            continue
        rest = rest.monic()
        rs = []
        order_ok = True
        for j, f in enumerate(sol):
            if f.den % rest:
                if poly_gcd(f.den, rest).degree >= 1:
                    failures.append(f"f{j}: denominator shares only part of {rest}")
                    order_ok = False
                rs.append(Polynomial())
                continue
            if poly_gcd(f.den // rest, rest).degree >= 1:
                failures.append(f"f{j}: pole of order > 1 at the roots of {rest}")
                order_ok = False
                rs.append(Polynomial())
                continue
            rs.append(residue_polynomial(f, rest))
        if not order_ok:
            continue
        sums = tuple(trace_mod(r, rest) for r in rs)
        counts, covered = _split_roots_by_pattern(rest, rs)
        profiles.append(PoleProfile(rest, sums, counts))
        for j, s in enumerate(sums):
            if s.denominator != 1:
                failures.append(f"f{j}: residue sum {s} over the roots of {rest} is not an integer")
        if covered != rest.degree:
            failures.append(
                f"roots of {rest}: only {covered} of {rest.degree} carry an admissible residue pattern")
        if rest.reflect().monic() != rest:
            failures.append(f"roots of {rest} are not closed under t -> -t")
        else:
            for j, r in enumerate(rs):
                if (r.reflect() - r) % rest:
                    failures.append(f"f{j}: residues at r and -r differ for roots r of {rest}")

    for c, vec in rational_residues.items():
        if c == 0:
            continue
        partner = rational_residues.get(-c)
        if partner is None:
            failures.append(f"t = {c} is a pole but t = {-c} is not")
        elif partner != vec:
            failures.append(f"residues at t = {c} {_fmt(vec)} differ from those at t = {-c} {_fmt(partner)}")

    return PoleAudit(profiles, failures)


def _fmt(vec) -> str:
    return "(" + ", ".join(str(v) for v in vec) + ")"


def residues_at(sol: SolutionTuple, c) -> tuple[Fraction, ...]:
    return tuple(residue_at(f, c) for f in sol)
