"""Bäcklund transformations: the reflections s0..s4 and the rotation pi.

Words are sequences of generators applied left to right. On concrete tuples
pi sends (a0, a1, a2, a3, a4) to (a4, a0, a1, a2, a3), for parameters and
for solution components alike.

Two actions are kept apart. The generic action on parameters ignores
solutions. The joint action on (parameters, solution) treats s_i as the
identity, parameters included, whenever f_i vanishes identically.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .laurent import InfinityType
from .system import N, ParamVec, SolutionTuple


class Generator(enum.Enum):
    S0 = "s0"
    S1 = "s1"
    S2 = "s2"
    S3 = "s3"
    S4 = "s4"
    PI = "pi"
    PI_INV = "pi^-1"

    @property
    def reflection_index(self) -> int | None:
        return _REFLECTION_INDEX.get(self)

    def inverse(self) -> Generator:
        if self is Generator.PI:
            return Generator.PI_INV
        if self is Generator.PI_INV:
            return Generator.PI
        return self

    def __str__(self) -> str:
        return self.value


S = (Generator.S0, Generator.S1, Generator.S2, Generator.S3, Generator.S4)
PI, PI_INV = Generator.PI, Generator.PI_INV
ALL_GENERATORS = (*S, PI, PI_INV)
_REFLECTION_INDEX = {g: i for i, g in enumerate(S)}

Word = tuple[Generator, ...]


def parse_word(text: str) -> Word:
    """Whitespace-separated tokens s0..s4, pi, pi^-1 (also 'pi-1' and 'pinv')."""
    aliases = {"pi-1": PI_INV, "pinv": PI_INV, "pi^{-1}": PI_INV}
    out = []
    for tok in text.split():
        low = tok.lower()
        if low in aliases:
            out.append(aliases[low])
            continue
        try:
            out.append(Generator(low))
        except ValueError:
            raise ValueError(f"unknown generator {tok!r}") from None
    return tuple(out)


def format_word(word: Iterable[Generator]) -> str:
    return " ".join(g.value for g in word)


def inverse_word(word: Sequence[Generator]) -> Word:
    return tuple(g.inverse() for g in reversed(word))


# -- generic action ------------------------------------------------------------

def _reflect_params(i: int, a: Sequence[Fraction]) -> tuple[Fraction, ...]:
    out = list(a)
    ai = a[i]
    out[i] = -ai
    out[(i + 1) % N] += ai
    out[(i - 1) % N] += ai
    return tuple(out)


def _rotate(xs: Sequence, g: Generator) -> tuple:
    if g is PI:
        return (xs[4], xs[0], xs[1], xs[2], xs[3])
    return (xs[1], xs[2], xs[3], xs[4], xs[0])


def apply_gen_params(g: Generator, params: ParamVec) -> ParamVec:
    i = g.reflection_index
    if i is None:
        return ParamVec(_rotate(params.alpha, g))
    return ParamVec(_reflect_params(i, params.alpha))


def apply_word_params(word: Iterable[Generator], params: ParamVec) -> ParamVec:
    for g in word:
        params = apply_gen_params(g, params)
    return params


# -- joint action ----------------------------------------------------------------

def is_degenerate(g: Generator, sol: SolutionTuple) -> bool:
    """True when g = s_i and f_i is identically zero."""
    i = g.reflection_index
    return i is not None and sol[i].is_zero()


def apply_gen(g: Generator, params: ParamVec, sol: SolutionTuple) -> tuple[ParamVec, SolutionTuple]:
    i = g.reflection_index
    if i is None:
        return ParamVec(_rotate(params.alpha, g)), SolutionTuple._trusted(_rotate(sol.f, g))
    fi = sol[i]
    if fi.is_zero():
        return params, sol
    ai = params[i]
    f = list(sol.f)
    if ai:
        q = fi.reciprocal() * ai
        f[(i + 1) % N] = f[(i + 1) % N] + q
        f[(i - 1) % N] = f[(i - 1) % N] - q
    return ParamVec(_reflect_params(i, params.alpha)), SolutionTuple._trusted(tuple(f))


@dataclass
class Transport:
    params: ParamVec
    sol: SolutionTuple | None
    degenerate_steps: list[int] = field(default_factory=list)


def transport(word: Iterable[Generator], params: ParamVec, sol: SolutionTuple | None) -> Transport:
    """Fold the word over (params, sol), recording positions where s_i fired as the identity."""
    fired = []
    for k, g in enumerate(word):
        if sol is None:
            params = apply_gen_params(g, params)
            continue
        if is_degenerate(g, sol):
            fired.append(k)
        params, sol = apply_gen(g, params, sol)
    return Transport(params, sol, fired)


def apply_word(word: Iterable[Generator], params: ParamVec,
               sol: SolutionTuple | None = None) -> tuple[ParamVec, SolutionTuple | None]:
    result = transport(word, params, sol)
    return result.params, result.sol


# -- shift operators -------------------------------------------------------------

def shift_operator(i: int) -> Word:
    """Word for the translation alpha_{i-1} += 1, alpha_i -= 1.

    Under the value-level rotation used here, the textbook word pi s4 s3 s2 s1
    translates the wrong way; the rotation token must be pi^-1. The five
    operators are cyclic rotations of one another.
    """
    base = (PI_INV, S[4], S[3], S[2], S[1])
    k = N - (i - 1) % N
    return base[k:] + base[:k]


def shift_power(i: int, n: int) -> Word:
    """T_i^n as a word; negative n uses the inverse word."""
    w = shift_operator(i)
    if n < 0:
        w, n = inverse_word(w), -n
    return w * n


def translate_params(params: ParamVec, i: int, n: int = 1) -> ParamVec:
    a = list(params.alpha)
    a[(i - 1) % N] += n
    a[i % N] -= n
    return ParamVec(a)


# -- relations -------------------------------------------------------------------

def relation_words() -> list[tuple[str, Word, Word]]:
    """(name, lhs, rhs) pairs that must act identically on parameters."""
    rels: list[tuple[str, Word, Word]] = []
    for i in range(N):
        rels.append((f"s{i}^2", (S[i], S[i]), ()))
    for i in range(N):
        for j in range(N):
            if i != j and (j - i) % N not in (1, N - 1):
                rels.append((f"(s{i} s{j})^2", (S[i], S[j]) * 2, ()))
    for i in range(N):
        j = (i + 1) % N
        rels.append((f"(s{i} s{j})^3", (S[i], S[j]) * 3, ()))
    rels.append(("pi^5", (PI,) * 5, ()))
    rels.append(("pi^-1^5", (PI_INV,) * 5, ()))
    rels.append(("pi pi^-1", (PI, PI_INV), ()))
    for i in range(N):
        j = (i + 1) % N
        # s_i followed by pi equals pi followed by s_{i+1}
        rels.append((f"s{i} pi = pi s{j}", (S[i], PI), (PI, S[j])))
    return rels


@dataclass
class RelationReport:
    checked: int
    violations: list[str]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_weyl_relations(samples: Sequence[ParamVec]) -> RelationReport:
    if not samples:
        raise ValueError("need at least one sample")
    rels = relation_words()
    violations = []
    for p in samples:
        for name, lhs, rhs in rels:
            a = apply_word_params(lhs, p)
            b = apply_word_params(rhs, p)
            if a != b:
                violations.append(f"{name} at {p}: {a} != {b}")
    return RelationReport(len(samples) * len(rels), violations)


def random_params(rng: random.Random, max_den: int = 30, spread: int = 3) -> ParamVec:
    """Pseudo-random parameter vector whose entries share a denominator <= max_den."""
    q = rng.randint(1, max_den)
    ks = [rng.randint(-spread * q, spread * q) for _ in range(N - 1)]
    ks.append(q - sum(ks))
    return ParamVec(Fraction(k, q) for k in ks)


# -- pole type at infinity under the generators ---------------------------------------

def type_action(g: Generator, kind: InfinityType) -> InfinityType:
    """Pole type at infinity after applying g, for a non-degenerate step.

    The rotations shift the base index. A reflection s_i acting at index
    offset d = i - base moves the poles as follows.
      A1: d = 0 keeps A1(base); d = 1, 4 give A1(base + 2), A1(base + 3);
          d = 2, 3 give A2(base), A2(base + 4).
      A2: d = 0, 1, 3 keep A2(base); d = 2, 4 give A1(base), A1(base + 1).
      B:  d = 0, 1, 2 keep B(base); d = 3, 4 give B(base + 4), B(base + 1).
      C is fixed.
    """
    if kind.kind == "C":
        return kind
    base = kind.index
    if g is PI:
        return InfinityType(kind.kind, base + 1)
    if g is PI_INV:
        return InfinityType(kind.kind, base - 1)
    d = (g.reflection_index - base) % N
    table = _TYPE_MOVES[kind.kind][d]
    return InfinityType(table[0], base + table[1])


_TYPE_MOVES = {
    "A1": {0: ("A1", 0), 1: ("A1", 2), 4: ("A1", 3), 2: ("A2", 0), 3: ("A2", 4)},
    "A2": {0: ("A2", 0), 1: ("A2", 0), 3: ("A2", 0), 2: ("A1", 0), 4: ("A1", 1)},
    "B": {0: ("B", 0), 1: ("B", 0), 2: ("B", 0), 3: ("B", 4), 4: ("B", 1)},
}
