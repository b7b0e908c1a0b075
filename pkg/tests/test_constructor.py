import dataclasses

import pytest

import a4painleve.constructor as constructor
from a4painleve.backlund import format_word
from a4painleve.classifier import CLASS1, CLASS2, CLASS3
from a4painleve.constructor import (
    Inconclusive,
    clear_cache,
    construct,
    construct_with_word,
    seed_solution,
    transport_audit,
)
from a4painleve.exact import caps
from a4painleve.system import ParamVec, SolutionTuple, verify_solution
from helpers import joint_orbit


@pytest.fixture(autouse=True)
def fresh_cache():
    clear_cache()
    yield
    clear_cache()


def test_seed_catalog():
    assert seed_solution(CLASS1) == (ParamVec((1, 0, 0, 0, 0)), SolutionTuple(("t", 0, 0, 0, 0)))
    assert seed_solution(CLASS2)[1] == SolutionTuple(("t/3", "t/3", "t/3", 0, 0))
    assert seed_solution(CLASS3)[1] == SolutionTuple(("t/5",) * 5)
    for label in (CLASS1, CLASS2, CLASS3):
        assert verify_solution(*reversed(seed_solution(label)))
    with pytest.raises(ValueError):
        seed_solution("Class4")


def test_construct_examples():
    assert construct(ParamVec((1, 0, 0, 0, 0))) == SolutionTuple(("t", 0, 0, 0, 0))
    assert construct(ParamVec((-1, 1, 0, 0, 1))) == SolutionTuple(("t", "1/t", 0, 0, "-1/t"))
    assert construct(ParamVec(("1/2", "1/2", 0, 0, 0))) is None


def test_round_trip_depth_five():
    states = joint_orbit(5)
    assert len(states) > 500
    for p, s in states.items():
        assert construct(p) == s, str(p)


def test_construct_is_deterministic():
    p = ParamVec(("-2/3", "4/3", "1/3", 0, 0))
    first = construct_with_word(p)
    clear_cache()
    second = construct_with_word(p)
    assert first.word == second.word and first.solution == second.solution
    assert first.route == "classifier"


def test_memo_hits_are_reverified():
    p = ParamVec((-1, 1, 0, 0, 1))
    construct(p)
    good = constructor._MEMO.get(p)
    bogus = SolutionTuple(("t", "2/t", 0, 0, "-2/t"))
    constructor._MEMO._table[p] = (bogus,) + good[1:]
    assert construct(p) == SolutionTuple(("t", "1/t", 0, 0, "-1/t"))


def _drifting_classify(real):
    """Wrap classify so that its word misses the target by one extra reflection."""
    from a4painleve.backlund import S

    def fake(params):
        r = real(params)
        if r.label is None:
            return r
        return dataclasses.replace(r, word_from_canonical=r.word_from_canonical + (S[0],))
    return fake


def test_search_fallback_when_the_word_misses(monkeypatch):
    monkeypatch.setattr(constructor, "classify", _drifting_classify(constructor.classify))
    p = ParamVec(("1/3", "-1/3", "2/3", "1/3", 0))
    built = construct_with_word(p)
    assert built.route == "search"
    assert verify_solution(built.solution, p)
    assert built.solution == joint_orbit(4)[p]


def test_depth_cap_is_inconclusive(monkeypatch):
    monkeypatch.setattr(constructor, "classify", _drifting_classify(constructor.classify))
    with caps(depth_cap=1):
        with pytest.raises(Inconclusive):
            construct(ParamVec((3, -2, 0, 0, 0)))


def test_degree_cap_is_inconclusive():
    with caps(degree_cap=3):
        with pytest.raises(Inconclusive):
            construct(ParamVec((4, -3, 0, 0, 0)))


def test_word_cap_is_inconclusive():
    with caps(word_cap=4):
        with pytest.raises(Inconclusive):
            construct(ParamVec((3, -2, 0, 0, 0)))


@pytest.mark.parametrize("alpha", ["1/3,1/3,1/3,0,0", "-1,1,0,0,1", "1/5,1/5,1/5,1/5,1/5",
                                   "2,-1,0,1,-1", "-1/5,2/5,1/5,1/5,2/5"])
def test_transport_audit_passes(alpha):
    report = transport_audit(ParamVec.parse(alpha))
    assert report.ok, report.details
    assert {"verify", "odd", "finite_poles", "residue_balance", "recurrence"} <= set(report.checks)


def test_transport_audit_rejects_unsolvable():
    with pytest.raises(ValueError):
        transport_audit(ParamVec(("1/2", "1/2", 0, 0, 0)))


def test_word_reported_with_construction():
    built = construct_with_word(ParamVec((-1, 1, 0, 0, 1)))
    assert built.label == CLASS1 and format_word(built.word)
