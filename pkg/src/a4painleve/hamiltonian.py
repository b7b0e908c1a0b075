"""The Hamiltonian of the system and residue calculus for its cubic part.

    H     = Hhat + linear terms in f_0..f_4
    Hhat  = f0 f1 f2 + f1 f2 f3 + f2 f3 f4 + f3 f4 f0 + f4 f0 f1

For a solution, Hhat is odd and expands at infinity as
h3 t^3 + h1 t + h_{-1} / t + ...; the residue theorem equates h_{-1} with the
sum of the finite residues of Hhat. Throughout, h_{-1} means the 1/t
coefficient, so Res_{t=oo} Hhat = -h_{-1}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import (
    INFINITY,
    Polynomial,
    RationalFunction,
    ZERO_RF,
    denominator_factors,
    expand,
    principal_residue_sum,
    residue_polynomial,
    residue_sum_over_factor,
)
from .laurent import InfinityType, predicted_profile
from .system import N, ParamVec, SolutionTuple


def hhat(sol: SolutionTuple) -> RationalFunction:
    total = ZERO_RF
    for j in range(N):
        total = total + sol[j] * sol[j + 1] * sol[j + 2]
    return total


def linear_coefficients(params: ParamVec) -> tuple[Fraction, ...]:
    a1, a2, a3, a4 = params[1], params[2], params[3], params[4]
    return (
        (2 * a1 - a2 + a3 - 2 * a4) / 5,
        (2 * a1 + 4 * a2 + a3 + 3 * a4) / 5,
        -(3 * a1 + a2 - a3 + 2 * a4) / 5,
        (2 * a1 - a2 + a3 + 3 * a4) / 5,
        -(3 * a1 + a2 + 4 * a3 + 2 * a4) / 5,
    )


def h_full(sol: SolutionTuple, params: ParamVec) -> RationalFunction:
    total = hhat(sol)
    for c, f in zip(linear_coefficients(params), sol):
        total = total + f * c
    return total


@dataclass(frozen=True)
class HamiltonianExpansion:
    h3: Fraction
    h1: Fraction
    hm1: Fraction
    odd: bool


def hamiltonian_expansion(sol: SolutionTuple, floor: int = -3) -> HamiltonianExpansion:
    s = expand(hhat(sol), INFINITY, floor)
    top = s.top if s.top is not None else floor
    odd = all(not s[k] for k in range(floor, top + 1) if k % 2 == 0)
    if top > 3:
        raise ValueError(f"Hhat has a pole of order {top} at infinity")
    return HamiltonianExpansion(s[3], s[1], s[-1], odd)


def h_inf_minus1(kind: InfinityType, params: ParamVec) -> Fraction:
    """Closed form for the 1/t coefficient of Hhat at infinity, by pole type."""
    if kind.kind == "C":
        a, b, c, d, e = predicted_profile(kind, params).subleading
        return (-a * a + a * e - b * b - a * c - c * c + c * d + 2 * d * e) / 5
    x = params.rotated(kind.index)
    if kind.kind == "A1":
        return -x[1] * x[2] - x[3] * x[4] - x[4] * x[1]
    if kind.kind == "A2":
        return -x[2] * (x[0] + x[3]) - x[4] * (x[1] + x[3]) - 3 * x[2] * x[4]
    return (-(x[0] - x[1] + x[3]) ** 2
            - (x[2] - x[0] - x[3] + x[4]) * (x[2] + x[4] - x[1])
            - 9 * x[3] * x[4]) / 3


def finite_residue_formula(pattern: int, i: int, params: ParamVec) -> Fraction:
    """Tabulated residue of Hhat at a finite pole with the given pattern at base index i.

    Rows 1 and 2 agree with the local expansion; row 3 omits a 3 alpha_i
    term, see `pattern_residue`.
    """
    if pattern == 1:
        return params[i + 2] + params[i + 4]
    if pattern == 2:
        return params[i + 1]
    if pattern == 3:
        return params[i + 1] + params[i + 4]
    raise ValueError(f"pattern must be 1, 2 or 3, got {pattern}")


def pattern_residue(pattern: int, i: int, params: ParamVec) -> Fraction:
    """Residue of Hhat at a finite pole, from the local expansion of the solution.

    Solving the system for a germ with residues (0, 3, 1, -1, -3) gives
    3 alpha_i + alpha_{i+1} + alpha_{i+4} for pattern 3, independent of the
    pole location and of the free constants of the germ.
    """
    value = finite_residue_formula(pattern, i, params)
    if pattern == 3:
        value += 3 * params[i]
    return value


@dataclass
class BalanceReport:
    h_minus1: Fraction
    finite_sum: Fraction
    contributions: list[tuple[str, int, Fraction]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.h_minus1 == self.finite_sum

    def __bool__(self) -> bool:
        return self.ok


def residue_balance(sol: SolutionTuple) -> BalanceReport:
    """Compare h_{-1} with the sum of finite residues of Hhat, computed factor by factor."""
    h = hhat(sol)
    hm1 = expand(h, INFINITY, -1)[-1]
    total = Fraction(0)
    parts = []
    for p, mult in denominator_factors(h):
        if mult == 1:
            s = residue_sum_over_factor(h, p)
        else:
            s = principal_residue_sum(h, p)
        parts.append((str(p), mult, s))
        total += s
    return BalanceReport(hm1, total, parts)


def residue_table(params: ParamVec) -> list[tuple[str, tuple[Fraction, ...]]]:
    labels = ("a_{i+2}+a_{i+4}", "a_{i+1}", "a_{i+1}+a_{i+4}")
    return [(labels[n - 1], tuple(finite_residue_formula(n, i, params) for i in range(N)))
            for n in (1, 2, 3)]


TABLE1_PARAMS = ParamVec((Fraction(1, 3), Fraction(1, 3), Fraction(1, 3), 0, 0))
TABLE2_PARAMS = ParamVec((1, 0, 0, 0, 0))


def emit_tables():
    """Finite residues of Hhat by pattern (rows) and base index (columns) at the two sample points."""
    return residue_table(TABLE1_PARAMS), residue_table(TABLE2_PARAMS)


def format_table(rows, title: str = "") -> str:
    cells = [[label] + [str(v) for v in vals] for label, vals in rows]
    header = ["pattern \\ i"] + [str(i) for i in range(N)]
    widths = [max(len(r[k]) for r in cells + [header]) for k in range(N + 1)]
    lines = [title] if title else []
    for r in [header] + cells:
        lines.append("  ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip())
    return "\n".join(lines)


def pattern_residue_checks(sol: SolutionTuple, params: ParamVec, profiles) -> list[str]:
    """Compare residues of Hhat with `pattern_residue` at every finite pole.

    `profiles` comes from the finite pole audit; each pattern there is tied to
    a factor whose roots carry it, and the residue polynomial of Hhat modulo
    that factor must be the predicted constant.
    """
    h = hhat(sol)
    problems = []
    for prof in profiles:
        for pat, factor in prof.patterns.items():
            want = pattern_residue(pat.number, pat.index, params)
            if h.den % factor:
                got = Polynomial()
            else:
                got = residue_polynomial(h, factor)
            if got != want:
                where = f"t = {prof.location}" if factor.degree == 1 else f"roots of {factor}"
                problems.append(f"{where}: Hhat residue {got}, {pat} predicts {want}")
    return problems
