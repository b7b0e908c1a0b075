"""Rational solutions by transporting a seed solution along Bäcklund words."""

from __future__ import annotations

import threading
from collections import deque
from dataclasses import dataclass, field

from .backlund import ALL_GENERATORS, Word, apply_gen, transport
from .classifier import WordCapExceeded, CLASS1, CLASS2, CLASS3, SEED_PARAMS, classify, in_fundamental_set
from .exact import INFINITY, DegreeCapExceeded, expand, limits
from .hamiltonian import h_inf_minus1, pattern_residue_checks, residue_balance
from .laurent import TaxonomyError, classify_infinity, expansion_agreement, finite_pole_audit, predicted_profile
from .system import ParamVec, SolutionTuple, is_odd, verify_solution

SEED_SOLUTIONS = {
    CLASS1: SolutionTuple(("t", 0, 0, 0, 0)),
    CLASS2: SolutionTuple(("t/3", "t/3", "t/3", 0, 0)),
    CLASS3: SolutionTuple(("t/5",) * 5),
}


class Inconclusive(RuntimeError):
    """A search or degree cap was hit; this says nothing about existence."""


def seed_solution(label: str) -> tuple[ParamVec, SolutionTuple]:
    try:
        return SEED_PARAMS[label], SEED_SOLUTIONS[label]
    except KeyError:
        raise ValueError(f"unknown class label {label!r}") from None


@dataclass
class Construction:
    solution: SolutionTuple
    word: Word
    label: str
    route: str  # "classifier" or "search"


class _Memo:
    """ParamVec -> solution, every hit re-verified before use."""

    def __init__(self):
        self._table: dict[ParamVec, tuple[SolutionTuple, Word, str]] = {}
        self._lock = threading.Lock()

    def get(self, params: ParamVec):
        with self._lock:
            hit = self._table.get(params)
        if hit is not None and verify_solution(hit[0], params):
            return hit
        return None

    def put(self, params: ParamVec, value) -> None:
        with self._lock:
            self._table.setdefault(params, value)

    def clear(self) -> None:
        with self._lock:
            self._table.clear()


_MEMO = _Memo()


def clear_cache() -> None:
    _MEMO.clear()


def _search(label: str, target: ParamVec, depth_cap: int) -> tuple[SolutionTuple, Word]:
    """Breadth-first search over the joint orbit of the seed; neighbors s0..s4, pi, pi^-1."""
    start, sol = seed_solution(label)
    if start == target:
        return sol, ()
    seen = {start: (sol, ())}
    frontier = deque([start])
    for _ in range(depth_cap):
        nxt = deque()
        while frontier:
            p = frontier.popleft()
            s, w = seen[p]
            for g in ALL_GENERATORS:
                p2, s2 = apply_gen(g, p, s)
                if p2 in seen:
                    continue
                seen[p2] = (s2, w + (g,))
                if p2 == target:
                    return s2, w + (g,)
                nxt.append(p2)
        frontier = nxt
    raise Inconclusive(f"{target} not reached from the {label} seed within depth {depth_cap}")


def construct_with_word(params: ParamVec) -> Construction | None:
    """Solution for params with the word that carries the seed to it, or None if none exists.

    The classifier's word is tried first under the joint action. If a
    reflection meets an identically zero component the realized parameters
    can drift from the target; then a breadth-first search takes over.
    """
    try:
        result = classify(params)
    except WordCapExceeded as exc:
        raise Inconclusive(str(exc)) from exc
    if result.label is None:
        return None
    hit = _MEMO.get(params)
    if hit is not None:
        sol, word, route = hit
        return Construction(sol, word, result.label, route)
    seed_params, seed_sol = seed_solution(result.label)
    try:
        moved = transport(result.word_from_canonical, seed_params, seed_sol)
        if moved.params == params:
            sol, word, route = moved.sol, result.word_from_canonical, "classifier"
        else:
            sol, word = _search(result.label, params, limits.DEPTH_CAP)
            route = "search"
    except DegreeCapExceeded as exc:
        raise Inconclusive(str(exc)) from exc
    report = verify_solution(sol, params)
    if not report:
        raise RuntimeError(f"transported tuple fails verification: {report.failures}")
    _MEMO.put(params, (sol, word, route))
    return Construction(sol, word, result.label, route)


def construct(params: ParamVec) -> SolutionTuple | None:
    built = construct_with_word(params)
    return None if built is None else built.solution


@dataclass
class AuditReport:
    params: ParamVec
    solution: SolutionTuple | None
    checks: dict[str, bool] = field(default_factory=dict)
    details: dict[str, list[str]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.solution is not None and all(self.checks.values())

    def record(self, name: str, problems: list[str]) -> None:
        self.checks[name] = not problems
        if problems:
            self.details[name] = problems


def audit_solution(sol: SolutionTuple, params: ParamVec, floor: int = -12) -> AuditReport:
    """Run every structural check on a known solution."""
    report = AuditReport(params, sol)
    report.record("verify", verify_solution(sol, params).failures)
    report.record("odd", [] if is_odd(sol) else ["(-f(-t)) differs from f"])
    try:
        kind = classify_infinity(sol)
    except TaxonomyError as exc:
        report.record("infinity_type", [str(exc)])
        return report
    report.record("infinity_type", [])
    prof = predicted_profile(kind, params)
    problems = []
    for j in range(5):
        s = expand(sol[j], INFINITY, -1)
        if (s[1], s[-1]) != (prof.leading[j], prof.subleading[j]):
            problems.append(f"f{j}: (t, 1/t) coefficients ({s[1]}, {s[-1]}) vs {kind} "
                            f"closed form ({prof.leading[j]}, {prof.subleading[j]})")
    report.record("infinity_profile", problems)
    report.record("recurrence", expansion_agreement(sol, params, floor))
    poles = finite_pole_audit(sol, params)
    report.record("finite_poles", poles.failures)
    report.record("pattern_residues", pattern_residue_checks(sol, params, poles.profiles))
    balance = residue_balance(sol)
    report.record("residue_balance", [] if balance.ok else
                  [f"h_-1 = {balance.h_minus1}, finite residues sum to {balance.finite_sum}"])
    hm1 = h_inf_minus1(kind, params)
    report.record("h_minus1_closed_form", [] if hm1 == balance.h_minus1 else
                  [f"closed form {hm1} vs expansion {balance.h_minus1}"])
    if in_fundamental_set(params):
        report.record("h_minus1_nonnegative", [] if balance.h_minus1 >= 0 else
                      [f"h_-1 = {balance.h_minus1} < 0 in the box"])
    return report


def transport_audit(params: ParamVec, floor: int = -12) -> AuditReport:
    sol = construct(params)
    if sol is None:
        raise ValueError(f"{params} has no rational solution")
    return audit_solution(sol, params, floor)


__all__ = [
    "AuditReport", "Construction", "Inconclusive", "SEED_SOLUTIONS", "audit_solution",
    "clear_cache", "construct", "construct_with_word", "seed_solution", "transport_audit",
]
