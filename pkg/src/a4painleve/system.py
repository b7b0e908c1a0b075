"""The A4 symmetric system

    f_i' = f_i (f_{i+1} - f_{i+2} + f_{i+3} - f_{i+4}) + alpha_i,   i mod 5,

with f_0 + ... + f_4 = t and alpha_0 + ... + alpha_4 = 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import Polynomial, RationalFunction, T_RF, ZERO_RF, parse_rational, parse_rational_function

N = 5


class ConstraintError(ValueError):
    """A parameter vector or solution tuple violates its normalization."""


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"parameters must be exact rationals, got {type(x).__name__}")


@dataclass(frozen=True)
class ParamVec:
    alpha: tuple[Fraction, ...]

    def __init__(self, alpha: Iterable):
        values = tuple(_to_fraction(a) for a in alpha)
        if len(values) != N:
            raise ConstraintError(f"expected {N} parameters, got {len(values)}")
        if sum(values) != 1:
            raise ConstraintError(f"parameters sum to {sum(values)}, not 1")
        object.__setattr__(self, "alpha", values)

    @classmethod
    def parse(cls, text: str) -> ParamVec:
        parts = text.split(",")
        if len(parts) != N:
            raise ConstraintError(f"expected {N} comma-separated rationals, got {len(parts)}")
        return cls(parse_rational(p) for p in parts)

    def __getitem__(self, i: int) -> Fraction:
        return self.alpha[i % N]

    def __iter__(self):
        return iter(self.alpha)

    def __str__(self) -> str:
        return "(" + ", ".join(str(a) for a in self.alpha) + ")"

    def rotated(self, i: int) -> tuple[Fraction, ...]:
        """(alpha_i, alpha_{i+1}, ..., alpha_{i+4})."""
        return tuple(self[i + k] for k in range(N))


def _to_rf(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, str):
        return parse_rational_function(x)
    if isinstance(x, (int, Fraction)):
        return RationalFunction(Polynomial((x,)))
    if isinstance(x, Polynomial):
        return RationalFunction(x)
    raise TypeError(f"cannot interpret {type(x).__name__} as a rational function")


@dataclass(frozen=True)
class SolutionTuple:
    f: tuple[RationalFunction, ...]

    def __init__(self, f: Iterable):
        comps = tuple(_to_rf(x) for x in f)
        if len(comps) != N:
            raise ConstraintError(f"expected {N} components, got {len(comps)}")
        total = ZERO_RF
        for c in comps:
            total = total + c
        if total != T_RF:
            raise ConstraintError(f"components sum to {total}, not t")
        object.__setattr__(self, "f", comps)

    @classmethod
    def _trusted(cls, comps: tuple[RationalFunction, ...]) -> SolutionTuple:
        obj = object.__new__(cls)
        object.__setattr__(obj, "f", comps)
        return obj

    def __getitem__(self, i: int) -> RationalFunction:
        return self.f[i % N]

    def __iter__(self):
        return iter(self.f)

    def __str__(self) -> str:
        return "; ".join(f"f{i} = {c}" for i, c in enumerate(self.f))

    def max_degree(self) -> int:
        return max(max(c.num.degree, c.den.degree) for c in self.f)


def alternating(sol: SolutionTuple, i: int) -> RationalFunction:
    """f_{i+1} - f_{i+2} + f_{i+3} - f_{i+4}."""
    return sol[i + 1] - sol[i + 2] + sol[i + 3] - sol[i + 4]


def residual(i: int, sol: SolutionTuple, params: ParamVec) -> RationalFunction:
    fi = sol[i]
    return fi.derivative() - fi * alternating(sol, i) - params[i]


@dataclass
class VerificationReport:
    ok: bool
    residuals: list[RationalFunction]
    sum_defect: RationalFunction
    failures: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def verify_solution(sol: SolutionTuple, params: ParamVec) -> VerificationReport:
    """Check the five equations and the normalization of the sum."""
    total = ZERO_RF
    for c in sol:
        total = total + c
    defect = total - T_RF
    residuals = [residual(i, sol, params) for i in range(N)]
    failures = [f"equation {i}: residual {r}" for i, r in enumerate(residuals) if r]
    if defect:
        failures.append(f"sum of components minus t = {defect}")
    return VerificationReport(not failures, residuals, defect, failures)


def negate_t(sol: SolutionTuple) -> SolutionTuple:
    """(-f_0(-t), ..., -f_4(-t)), which again solves the same system."""
    return SolutionTuple._trusted(tuple(-c.reflect() for c in sol))


def is_odd(sol: SolutionTuple) -> bool:
    return negate_t(sol) == sol


def a2_embedding_check(sol: SolutionTuple, params: ParamVec) -> bool:
    """With f_3 = f_4 = 0, check that (f_0, f_1, f_2) solves the three-component system

        f_j' = f_j (f_{j+1} - f_{j+2}) + alpha_j,   j mod 3.
    """
    if sol[3] or sol[4]:
        raise ConstraintError("the three-component reduction needs f3 = f4 = 0")
    f = sol.f[:3]
    for j in range(3):
        lhs = f[j].derivative()
        rhs = f[j] * (f[(j + 1) % 3] - f[(j + 2) % 3]) + params[j]
        if lhs != rhs:
            return False
    return True


def make_params(*alpha) -> ParamVec:
    if len(alpha) == 1 and not isinstance(alpha[0], (int, Fraction, str)):
        alpha = tuple(alpha[0])
    return ParamVec(alpha)


def make_solution(*f) -> SolutionTuple:
    if len(f) == 1 and isinstance(f[0], Sequence) and not isinstance(f[0], str):
        f = tuple(f[0])
    return SolutionTuple(f)
