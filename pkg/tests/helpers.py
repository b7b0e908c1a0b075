"""Shared fixtures-as-functions for the test suite.

Everything here is written independently of the package's own search code so
that it can serve as an oracle.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache

from a4painleve.backlund import ALL_GENERATORS, apply_gen
from a4painleve.classifier import CLASS1, CLASS2, CLASS3
from a4painleve.system import ParamVec, SolutionTuple

SEEDS = (
    (ParamVec((1, 0, 0, 0, 0)), SolutionTuple(("t", 0, 0, 0, 0))),
    (ParamVec(("1/3", "1/3", "1/3", 0, 0)), SolutionTuple(("t/3", "t/3", "t/3", 0, 0))),
    (ParamVec(("1/5",) * 5), SolutionTuple(("t/5",) * 5)),
)


@lru_cache(maxsize=None)
def joint_orbit(depth: int = 4) -> dict[ParamVec, SolutionTuple]:
    """Every (params, solution) reachable from a seed by a word of length <= depth.

    Deduplicated by parameters; the first solution reached is kept.
    """
    states: dict[ParamVec, SolutionTuple] = {}
    for p0, s0 in SEEDS:
        states.setdefault(p0, s0)
        frontier = [(p0, s0)]
        for _ in range(depth):
            nxt = []
            for p, s in frontier:
                for g in ALL_GENERATORS:
                    p2, s2 = apply_gen(g, p, s)
                    if p2 not in states:
                        states[p2] = s2
                        nxt.append((p2, s2))
            frontier = nxt
    return states


def rational_params(rng: random.Random, max_den: int = 30) -> ParamVec:
    ks = [Fraction(rng.randint(-60, 60), rng.randint(1, max_den)) for _ in range(4)]
    return ParamVec(ks + [1 - sum(ks)])


def frac_part(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def brute_force_label(params: ParamVec) -> str | None:
    """Literal enumeration of the existence conditions over every i, sign and j.

    Works on 15 * alpha in integers; any denominator not dividing 15 rules
    out Class2 and Class3 at once.
    """
    if all(x.denominator == 1 for x in params):
        return CLASS1
    if any(15 % x.denominator for x in params):
        return None
    a = [int(x * 15) % 15 for x in params]

    def matches(vec):
        return any(all((a[(i + k) % 5] - vec[k]) % 15 == 0 for k in range(5)) for i in range(5))

    for sign in (1, -1):
        for base in ((1, 1, 1, 0, 0), (1, -1, -1, 1, 0)):
            if matches([sign * 5 * b for b in base]):
                return CLASS2
    for j in range(1, 5):
        for base in ((1, 1, 1, 1, 1), (1, 2, 1, 3, 3)):
            if matches([3 * j * b for b in base]):
                return CLASS3
    return None
