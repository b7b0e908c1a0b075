"""Existence decision for rational solutions and reduction to the box 0 <= alpha_i <= 1.

A parameter vector admits a rational solution exactly when it is all
integers (Class1), or some rotation is congruent mod Z to one of
+-(1,1,1,0,0)/3, +-(1,-1,-1,1,0)/3 (Class2), or to (j/5)(1,1,1,1,1),
(j/5)(1,2,1,3,3) for j = 1..4 (Class3).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .backlund import PI, PI_INV, S, Word, apply_gen_params, apply_word_params, shift_power
from .exact import limits
from .system import N, ParamVec

CLASS1, CLASS2, CLASS3 = "Class1", "Class2", "Class3"

SEED_PARAMS = {
    CLASS1: ParamVec((1, 0, 0, 0, 0)),
    CLASS2: ParamVec((Fraction(1, 3), Fraction(1, 3), Fraction(1, 3), 0, 0)),
    CLASS3: ParamVec((Fraction(1, 5),) * N),
}


def _v(*xs, den=1) -> tuple[Fraction, ...]:
    return tuple(Fraction(x, den) for x in xs)


# Points of the box that every vector passing `necessary_condition` can be moved to.
# Only the three seed points carry solutions; the others are listed so that
# reduction is defined on the whole necessary-condition locus.
BOX_REPRESENTATIVES = (
    _v(1, 0, 0, 0, 0),
    _v(1, 1, 1, 0, 0, den=3),
    _v(2, 0, 0, 1, 0, den=3),
    _v(1, 0, 0, 2, 0, den=3),
    _v(0, 1, 0, 1, 1, den=3),
    _v(1, 1, 1, 1, 1, den=5),
    _v(3, 0, 1, 1, 0, den=5),
    _v(1, 0, 2, 2, 0, den=5),
    _v(1, 2, 0, 0, 2, den=5),
    _v(3, 1, 0, 0, 1, den=5),
)

CLASS2_VECTORS = (_v(1, 1, 1, 0, 0, den=3), _v(1, -1, -1, 1, 0, den=3))
CLASS3_VECTORS = (_v(1, 1, 1, 1, 1, den=5), _v(1, 2, 1, 3, 3, den=5))


class ReductionError(ValueError):
    """The input is outside the reducible locus."""


class WordCapExceeded(ReductionError):
    """A reduction word would be longer than the configured cap."""


def _frac(xs) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) % 1 for x in xs)


def _denominators_divide(params: ParamVec, q: int) -> bool:
    return all(q % a.denominator == 0 for a in params)


def _congruent(xs, ys) -> bool:
    return all((Fraction(x) - y).denominator == 1 for x, y in zip(xs, ys))


# -- necessary condition ---------------------------------------------------------------

@dataclass(frozen=True)
class TypePattern:
    """A matched congruence pattern: kind 'A', 'B' or 'C', base index and the integers n."""
    kind: str
    index: int
    ns: tuple[int, ...]

    def vector(self) -> tuple[Fraction, ...]:
        """Pattern values for (alpha_i, ..., alpha_{i+4})."""
        if self.kind == "A":
            return (Fraction(0),) * N
        if self.kind == "B":
            n1, n3, n4 = self.ns
            return _v(n1 - n3, n1, n1 + n4, n3, -n4, den=3)
        n1, n2, n3 = self.ns
        return _v(n1 + 2 * n2 + 3 * n3, n1 + 2 * n2 + n3, n1, n1 + n2, n1 + n3, den=5)


def necessary_condition(params: ParamVec) -> TypePattern | None:
    """First matching pattern, trying kinds A, B, C, then base index, then n's lexicographically."""
    if all(a.denominator == 1 for a in params):
        return TypePattern("A", 0, ())
    for kind, size, count in (("B", 3, 3), ("C", 5, 3)):
        if not _denominators_divide(params, size):
            continue
        for i in range(N):
            rot = params.rotated(i)
            for ns in product(range(size), repeat=count):
                pat = TypePattern(kind, i, ns)
                if _congruent(rot, pat.vector()):
                    return pat
    return None


# -- classification ----------------------------------------------------------------------

@dataclass(frozen=True)
class Witness:
    index: int
    sign: int | None
    j: int | None
    vector: tuple[Fraction, ...]


@dataclass(frozen=True)
class ClassificationResult:
    label: str | None
    witness: Witness | None = None
    canonical: ParamVec | None = None
    word_from_canonical: Word | None = None


# (sign or j, vector, vector mod 1) in tie-break order
_CLASS2_TARGETS = tuple((sign, t, _frac(t)) for sign in (1, -1)
                        for t in (tuple(sign * x for x in vec) for vec in CLASS2_VECTORS))
_CLASS3_TARGETS = tuple((j, t, _frac(t)) for j in range(1, 5)
                        for t in (tuple(j * x for x in vec) for vec in CLASS3_VECTORS))


def find_witness(params: ParamVec) -> tuple[str, Witness | None] | None:
    """Label and witness; ties go to the smallest i, then + before - (or smallest j), then vector order."""
    if all(a.denominator == 1 for a in params):
        return CLASS1, None
    thirds, fifths = _denominators_divide(params, 3), _denominators_divide(params, 5)
    if not (thirds or fifths):
        return None
    fr = _frac(params)
    for i in range(N if thirds else 0):
        rot = fr[i:] + fr[:i]
        for sign, target, reduced in _CLASS2_TARGETS:
            if rot == reduced:
                return CLASS2, Witness(i, sign, None, target)
    for i in range(N if fifths else 0):
        rot = fr[i:] + fr[:i]
        for j, target, reduced in _CLASS3_TARGETS:
            if rot == reduced:
                return CLASS3, Witness(i, None, j, target)
    return None


def classify(params: ParamVec) -> ClassificationResult:
    found = find_witness(params)
    if found is None:
        return ClassificationResult(None)
    label, witness = found
    word, canonical = reduce_to_canonical(params)
    if canonical != SEED_PARAMS[label]:
        raise ReductionError(f"{params} classified {label} but reduced to {canonical}")
    return ClassificationResult(label, witness, canonical, word)


def in_fundamental_set(params: ParamVec) -> bool:
    return all(0 <= a <= 1 for a in params)


# -- reduction ------------------------------------------------------------------------

def _alcove_walk(params: ParamVec, cap: int) -> tuple[list[int], ParamVec]:
    """Reflect in s_i for the smallest i with alpha_i < 0 until the box is reached."""
    walk = []
    while True:
        neg = next((i for i, a in enumerate(params) if a < 0), None)
        if neg is None:
            return walk, params
        if len(walk) >= cap:
            raise WordCapExceeded(f"reduction needs more than {cap} reflections")
        params = apply_gen_params(S[neg], params)
        walk.append(neg)


def _match_rotation(point: ParamVec) -> tuple[int, ParamVec]:
    """(k, rep) with rep in BOX_REPRESENTATIVES and pi^k . rep == point."""
    for rep in BOX_REPRESENTATIVES:
        for k in range(N):
            rotated = tuple(rep[(m - k) % N] for m in range(N))
            if rotated == point.alpha:
                return k, ParamVec(rep)
    raise ReductionError(f"{point} lies in the box but matches no listed representative")


def _rotation_word(k: int) -> Word:
    return (PI,) * k if k <= 2 else (PI_INV,) * (N - k)


def integer_shift_word(params: ParamVec) -> Word:
    """Word of shift-operator powers carrying (1,0,0,0,0) to an all-integer vector.

    T_i adds 1 to alpha_{i-1} and subtracts 1 from alpha_i; the exponents of
    T_1..T_4 follow from the differences by back substitution.
    """
    if any(a.denominator != 1 for a in params):
        raise ReductionError(f"{params} is not all integers")
    d = [int(a) for a in params]
    d[0] -= 1
    n = [0] * N
    n[4] = -d[4]
    for i in (3, 2, 1):
        n[i] = n[i + 1] - d[i]
    word: Word = ()
    for i in (1, 2, 3, 4):
        word += shift_power(i, n[i])
    return word


def reduce_to_canonical(params: ParamVec) -> tuple[Word, ParamVec]:
    """Word w and box point c with w applied to c (generic action) equal to params.

    For solvable input c is one of the three seed parameter vectors. Input
    that only passes `necessary_condition` reduces to one of the other listed
    box points. All-integer input uses shift-operator powers when these fit
    under the word cap.
    """
    if necessary_condition(params) is None:
        raise ReductionError(f"{params} fails the necessary congruence condition")
    cap = limits.WORD_CAP
    if all(a.denominator == 1 for a in params):
        word = integer_shift_word(params)
        if len(word) <= cap:
            return _checked(word, SEED_PARAMS[CLASS1], params)
    walk, point = _alcove_walk(params, cap)
    k, rep = _match_rotation(point)
    word = _rotation_word(k) + tuple(S[i] for i in reversed(walk))
    if len(word) > cap:
        raise WordCapExceeded(f"reduction word for {params} has length {len(word)} > {cap}")
    return _checked(word, rep, params)


def _checked(word: Word, canonical: ParamVec, target: ParamVec) -> tuple[Word, ParamVec]:
    got = apply_word_params(word, canonical)
    if got != target:
        raise ReductionError(f"word re-application gave {got}, expected {target}")
    return word, canonical


# -- orbit oracle over fractional parts --------------------------------------------------

def _gen_mod_one(g, xs: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    out = list(xs)
    i = g.reflection_index
    if i is None:
        if g is PI:
            return (xs[4], xs[0], xs[1], xs[2], xs[3])
        return (xs[1], xs[2], xs[3], xs[4], xs[0])
    out[i] = -xs[i]
    out[(i + 1) % N] += xs[i]
    out[(i - 1) % N] += xs[i]
    return _frac(out)


@lru_cache(maxsize=None)
def fractional_orbits() -> dict[tuple[Fraction, ...], str]:
    """Fractional-part classes reachable from each seed, by breadth-first search mod Z.

    Built once; the table maps a tuple of fractional parts to the seed label.
    """
    table: dict[tuple[Fraction, ...], str] = {}
    for label, seed in SEED_PARAMS.items():
        start = _frac(seed)
        queue = deque([start])
        table[start] = label
        while queue:
            cur = queue.popleft()
            for g in (*S, PI):
                nxt = _gen_mod_one(g, cur)
                if nxt not in table:
                    table[nxt] = label
                    queue.append(nxt)
    return table


def orbit_label(params: ParamVec) -> str | None:
    """Seed label whose mod-Z orbit contains params, or None."""
    return fractional_orbits().get(_frac(params))
