import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from a4painleve.backlund import ALL_GENERATORS, PI, apply_word_params, shift_operator
from a4painleve.classifier import (
    BOX_REPRESENTATIVES,
    CLASS1,
    CLASS2,
    CLASS3,
    ReductionError,
    TypePattern,
    WordCapExceeded,
    classify,
    fractional_orbits,
    in_fundamental_set,
    integer_shift_word,
    necessary_condition,
    orbit_label,
    reduce_to_canonical,
)
from a4painleve.exact import caps
from a4painleve.system import ParamVec
from helpers import brute_force_label, frac_part

THIRD, FIFTH = Fraction(1, 3), Fraction(1, 5)


# -- examples ---------------------------------------------------------------------------

def test_necessary_condition_examples():
    assert necessary_condition(ParamVec((1, 0, 0, 0, 0))) == TypePattern("A", 0, ())
    b = necessary_condition(ParamVec(("1/3", "1/3", "1/3", 0, 0)))
    assert b.kind == "B"
    assert any(necessary_condition_at(ParamVec(("1/3", "1/3", "1/3", 0, 0)), "B", i, (1, 0, 0))
               for i in range(5))
    assert necessary_condition(ParamVec(("1/2", "1/2", 0, 0, 0))) is None


def necessary_condition_at(params, kind, i, ns):
    vec = TypePattern(kind, i, ns).vector()
    return all(frac_part(params[i + k] - vec[k]) == 0 for k in range(5))


def test_classify_examples():
    r = classify(ParamVec((1, 0, 0, 0, 0)))
    assert r.label == CLASS1 and r.canonical == ParamVec((1, 0, 0, 0, 0)) and r.word_from_canonical == ()
    r = classify(ParamVec((FIFTH,) * 5))
    assert r.label == CLASS3 and r.witness.j == 1 and r.witness.vector == (FIFTH,) * 5
    assert classify(ParamVec(("2/3", 0, 0, "1/3", 0))).label is None


def test_tie_breaking():
    # (1/3,1/3,1/3,0,0) matches +(1,1,1,0,0)/3 at i = 0 before anything else
    w = classify(ParamVec((THIRD, THIRD, THIRD, 0, 0))).witness
    assert (w.index, w.sign, w.vector) == (0, 1, (THIRD, THIRD, THIRD, 0, 0))
    # -(1,1,1,0,0)/3 = (2/3,2/3,2/3,0,0) mod Z
    w = classify(ParamVec(("-1/3", "2/3", "2/3", 0, 0))).witness
    assert w.sign == -1 and w.index == 0


def test_reduce_examples():
    word, canonical = reduce_to_canonical(ParamVec((THIRD, THIRD, 0, 0, THIRD)))
    assert canonical == ParamVec((THIRD, THIRD, THIRD, 0, 0))
    assert any(g.reflection_index is None for g in word)
    assert reduce_to_canonical(ParamVec((1, 0, 0, 0, 0))) == ((), ParamVec((1, 0, 0, 0, 0)))


@pytest.mark.parametrize("n0, n1", [(3, -2), (-4, 5), (0, 1), (2, -1)])
def test_integer_reduction_uses_shift_operators(n0, n1):
    params = ParamVec((n0, n1, 0, 0, 0))
    word, canonical = reduce_to_canonical(params)
    assert canonical == ParamVec((1, 0, 0, 0, 0))
    assert word == integer_shift_word(params)
    ops = {shift_operator(i) for i in range(5)} | {tuple(g.inverse() for g in reversed(shift_operator(i)))
                                                      for i in range(5)}
    assert all(word[k:k + 5] in ops for k in range(0, len(word), 5))


def test_reduction_rejects_inputs_failing_the_congruence():
    with pytest.raises(ReductionError):
        reduce_to_canonical(ParamVec(("1/2", "1/2", 0, 0, 0)))


def test_word_cap():
    params = ParamVec(("-29/3", "31/3", "1/3", 0, 0))
    with caps(word_cap=3):
        with pytest.raises(WordCapExceeded):
            reduce_to_canonical(params)
    assert classify(params).label == CLASS2
    far = ParamVec(("-69/5", "17/5", "31/5", "13/5", "13/5"))
    with pytest.raises(WordCapExceeded):
        classify(far)
    with caps(word_cap=200):
        r = classify(far)
    assert r.label == CLASS3 and apply_word_params(r.word_from_canonical, r.canonical) == far


def test_in_fundamental_set():
    assert in_fundamental_set(ParamVec((FIFTH,) * 5))
    assert not in_fundamental_set(ParamVec((-1, 1, 0, 0, 1)))
    assert in_fundamental_set(ParamVec(("2/3", 0, 0, "1/3", 0)))


# -- the grid with denominators dividing 15 ---------------------------------------------

def grid_points(offset_range=(-2, 2)):
    """Fractional parts k/15 with integer sum, then integer shifts keeping the sum 1."""
    rng = random.Random(15)
    lo, hi = offset_range
    for ks in itertools.product(range(15), repeat=4):
        rest = (-sum(ks)) % 15
        fr = [Fraction(k, 15) for k in ks] + [Fraction(rest, 15)]
        deficit = 1 - sum(fr)
        coords = list(fr)
        coords[rng.randrange(5)] += deficit
        i, j = rng.sample(range(5), 2)
        d = rng.randint(lo, hi)
        coords[i] += d
        coords[j] -= d
        yield ParamVec(coords)


def test_classify_agrees_with_brute_force_on_15_grid():
    disagreements = []
    counts = {CLASS1: 0, CLASS2: 0, CLASS3: 0, None: 0}
    for p in grid_points():
        got = classify(p)
        want = brute_force_label(p)
        counts[want] += 1
        if got.label != want:
            disagreements.append((str(p), got.label, want))
        elif got.label is not None:
            assert apply_word_params(got.word_from_canonical, got.canonical) == p
            assert (got.label == CLASS1) == all(a.denominator == 1 for a in p)
    assert disagreements == []
    assert counts[CLASS1] == 1 and counts[CLASS2] == 20 and counts[CLASS3] == 24


def test_orbit_oracle_agrees_with_classify():
    table = fractional_orbits()
    assert sorted(set(table.values())) == [CLASS1, CLASS2, CLASS3]
    for n, p in enumerate(grid_points()):
        if n % 7 == 0 or orbit_label(p) is not None:
            assert orbit_label(p) == classify(p).label, str(p)


def test_every_congruence_pattern_reduces_to_a_listed_point():
    rng = random.Random(9)
    for kind, size in (("B", 3), ("C", 5)):
        for i in range(5):
            for ns in itertools.product(range(size), repeat=3):
                vec = TypePattern(kind, i, ns).vector()
                coords = [Fraction(0)] * 5
                for k in range(5):
                    coords[(i + k) % 5] = vec[k]
                coords[rng.randrange(5)] += 1 - sum(coords)
                a, b = rng.sample(range(5), 2)
                d = rng.randint(-2, 2)
                coords[a] += d
                coords[b] -= d
                p = ParamVec(coords)
                word, canonical = reduce_to_canonical(p)
                assert canonical.alpha in BOX_REPRESENTATIVES
                assert apply_word_params(word, canonical) == p


# -- properties -------------------------------------------------------------------------

small_fracs = st.sampled_from([Fraction(k, d) for d in (1, 2, 3, 5, 15) for k in range(-2 * d, 2 * d + 1)])
params_strategy = st.lists(small_fracs, min_size=4, max_size=4).map(lambda xs: ParamVec(xs + [1 - sum(xs)]))


@given(params_strategy)
def test_cyclic_invariance(p):
    assert classify(apply_word_params((PI,), p)).label == classify(p).label


@given(params_strategy, st.lists(st.sampled_from(ALL_GENERATORS), max_size=6))
def test_label_is_invariant_under_the_group(p, word):
    assert classify(apply_word_params(tuple(word), p)).label == classify(p).label


@given(params_strategy)
def test_reduction_soundness(p):
    r = classify(p)
    assert (r.label is None) == (brute_force_label(p) is None)
    if r.label is not None:
        assert apply_word_params(r.word_from_canonical, r.canonical) == p
        assert in_fundamental_set(r.canonical)
